#pragma once

#include "hypcomp/morphism.hpp"
#include "hypcomp/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace hypcomp {

// The constant alpha of the family: a rational, or the indeterminate "a".
// A symbolic alpha adds "a" as the last context variable, so one identity
// over Q[a] covers every specialization at once.
struct Alpha {
  std::optional<Rational> value;

  static Alpha symbolic() { return {}; }
  static Alpha rational(Rational v) { return Alpha{std::move(v)}; }
  bool is_symbolic() const noexcept { return !value.has_value(); }
  // "sym" or the rational in p/q form.
  std::string to_string() const;
  // Accepts "sym" or a rational literal.
  static Alpha parse(std::string_view text);
};

// x1^2...xm^2 y + z^2 + x1...xm (z^2 - alpha)^k = alpha in C^{m+2}.
struct FamilyParams {
  unsigned m = 1;
  unsigned k = 0;
  Alpha alpha;
};

// Throws std::invalid_argument when m < 1.
void validate(const FamilyParams& params);

// (x1..xm, y, z) plus "a" when alpha is symbolic.
VarContext family_context(unsigned m, bool symbolic_alpha);
// (t) or (t, a).
VarContext univariate_context(bool with_parameter = false);

// x1^2...xm^2 y + z^2 + x1...xm q(z^2). q lives over (t) or (t, a); the
// result carries "a" exactly when q's context does.
Polynomial make_pq(unsigned m, const Polynomial& q);

// (t - alpha)^k over univariate_context(alpha symbolic).
Polynomial family_q(const FamilyParams& params);

// Defining polynomial P_{(t-alpha)^k} - alpha of H_{alpha,k}.
Polynomial make_hypersurface(const FamilyParams& params);

// The k = 0 member, Q = P_1 - alpha, in the same context as make_hypersurface.
Polynomial make_reference(const FamilyParams& params);

enum class Side { P, Q };

// (S^k - (z^2-alpha)^k) / (x1...xm) for S = P or Q, as a polynomial.
// Requires k >= 1 (std::invalid_argument otherwise).
Polynomial quotient_witness(const FamilyParams& params, Side side);

struct MorphismOptions {
  // Negative control: build Phi with denominator exponent k - 1.
  bool corrupt_phi = false;
};

// Phi: complement of H_{alpha,0} -> complement of H_{alpha,k}.
Morphism make_phi(const FamilyParams& params, const MorphismOptions& options = {});
// Psi: complement of H_{alpha,k} -> complement of H_{alpha,0}.
Morphism make_psi(const FamilyParams& params);

struct Check {
  std::string name;
  bool passed = false;
};

struct ComplementCertificate {
  unsigned m = 1;
  Alpha alpha;
  unsigned k = 0;
  unsigned kprime = 0;
  std::vector<Check> checks;

  bool verified() const;
  // Names of failed checks.
  std::vector<std::string> failures() const;
};

// Checks that Phi_k, Psi_k are mutually inverse maps between the complements
// of H_{alpha,k} and H_{alpha,0}, and the same for k'. The k <-> k' map is
// Phi_k' o Psi_k with inverse Phi_k o Psi_k'. Every check is an exact
// identity of rational functions.
ComplementCertificate verify_complement_isomorphism(unsigned m, const Alpha& alpha, unsigned k, unsigned kprime,
                                                    const MorphismOptions& options = {});

// Checks for the k-side alone, named as in the certificate; `suffix`
// is appended to each name.
std::vector<Check> verify_morphism_pair(const FamilyParams& params, const MorphismOptions& options = {},
                                        std::string_view suffix = "");

// Numeric oracle: random rational points off V(Q) and the coordinate
// hyperplanes; asserts P(Phi(p)) = Q(p) and Psi(Phi(p)) = p exactly.
struct SpotCheckResult {
  std::size_t points = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;

  bool passed() const noexcept { return failures == 0; }
};

SpotCheckResult spot_check_complement(const FamilyParams& params, std::size_t points, std::uint64_t seed,
                                      const MorphismOptions& options = {});

// Random rational with |numerator| <= bound and 1 <= denominator <= bound.
Rational random_small_rational(std::mt19937_64& rng, long bound = 10);

enum class FiberClass { V_P0, V_P0_minus_1, V_P1, V_P1_minus_1 };

// "V(P0)", "V(P0-1)", "V(P1)", "V(P1-1)".
std::string_view to_string(FiberClass c);

// Class of V(P_q - c) among the four reference varieties. q lives over (t).
FiberClass classify_fiber(const Polynomial& q, const Rational& c);

// classify_fiber((t - alpha)^k, alpha). Throws Unsupported for symbolic alpha.
FiberClass classify_hypersurface(const FamilyParams& params);

}  // namespace hypcomp
