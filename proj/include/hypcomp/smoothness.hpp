#pragma once

#include "hypcomp/family.hpp"
#include "hypcomp/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypcomp {

// Multipliers g_F, g_x1..g_xm, g_y, g_z with
// g_F F + sum g_xi F_xi + g_y F_y + g_z F_z = tau.
struct SmoothnessCertificate {
  std::vector<Polynomial> multipliers;
  Polynomial tau;
};

struct SingularityReport {
  enum class Verdict { Singular, Smooth };
  Verdict verdict = Verdict::Smooth;
  Polynomial polynomial{VarContext{}};
  std::optional<Point> witness;
  std::optional<SmoothnessCertificate> certificate;
  // Set for symbolic alpha: the certificate only covers alpha != 0.
  std::string caveat;
};

std::string_view to_string(SingularityReport::Verdict v);

// F followed by its partials in every coordinate except the parameter "a".
std::vector<Polynomial> jacobian_generators(const Polynomial& f);

// F and all its partial derivatives vanish at the point. Throws MissingBinding.
bool is_singular_point(const Polynomial& f, const Point& point);

// Checks the identity exactly, with tau a nonzero constant, or the variable
// "a" when the context carries the symbolic parameter.
bool verify_certificate(const Polynomial& f, const SmoothnessCertificate& certificate);

// Singular with the origin as witness exactly when alpha = 0 and
// (k >= 1 or m >= 2); Smooth with a certificate otherwise.
SingularityReport family_singularity(const FamilyParams& params);

}  // namespace hypcomp
