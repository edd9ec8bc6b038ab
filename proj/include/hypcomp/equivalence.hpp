#pragma once

#include "hypcomp/polynomial.hpp"

#include <optional>
#include <string>
#include <variant>

namespace hypcomp {

// mu is any complex root of mu^g = s.
struct Radical {
  unsigned long g = 1;
  Rational s;
};

using MuSpec = std::variant<Rational, Radical>;

// lambda = coefficient * mu^mu_power.
struct LambdaSpec {
  Rational coefficient;
  long mu_power = 0;
};

// Existence of lambda, mu in C* with c2 = c1/mu and q2(t) = lambda q1(mu t).
struct EquivalenceVerdict {
  bool equivalent = false;
  MuSpec mu = Rational(1);
  LambdaSpec lambda{Rational(1), 0};
  std::string reason;  // set when not equivalent
};

// q1, q2 are polynomials over a context whose only variable is "t"
// (Unsupported otherwise). The decision is exact and total.
EquivalenceVerdict decide_equivalence(const Polynomial& q1, const Rational& c1, const Polynomial& q2,
                                      const Rational& c2);

// Checks a positive verdict's witness. Radical witnesses are checked in
// Q[mu]/(mu^g - s), which is sound for every root.
bool verify_equivalence_witness(const Polynomial& q1, const Rational& c1, const Polynomial& q2, const Rational& c2,
                                const EquivalenceVerdict& verdict);

// Exact g-th root when s is a g-th power in Q.
std::optional<Rational> rational_root(const Rational& s, unsigned long g);

std::string to_string(const MuSpec& mu);
std::string to_string(const LambdaSpec& lambda);

}  // namespace hypcomp
