#pragma once

#include "hypcomp/polynomial.hpp"

#include <span>
#include <vector>

namespace hypcomp {

struct Factor {
  Polynomial base;  // monic, non-constant
  unsigned exponent;
};

// Quotient num/den of polynomials over one context.
//
// The value is stored as scale * prod(num factors) / prod(den factors) with
// monic bases. Keeping the product form lets known factors (P, Q, x_i) cancel
// by equality and exact division without a multivariate gcd. No reduction to
// lowest terms is promised; equality is cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(const Polynomial& numerator);
  // Throws DivisionByZero for a zero denominator. Cancels the denominator
  // when it divides the numerator exactly.
  RationalFunction(const Polynomial& numerator, const Polynomial& denominator);

  const VarContext& context() const noexcept { return context_; }
  const Rational& scale() const noexcept { return scale_; }
  std::span<const Factor> numerator_factors() const noexcept { return num_; }
  std::span<const Factor> denominator_factors() const noexcept { return den_; }

  // Expanded forms.
  Polynomial numerator() const;
  Polynomial denominator() const;

  bool is_zero() const noexcept { return scale_ == 0; }
  bool is_polynomial() const noexcept { return den_.empty(); }
  unsigned numerator_degree() const;
  unsigned denominator_degree() const;

 private:
  RationalFunction(VarContext context, Rational scale, std::vector<Factor> num, std::vector<Factor> den);
  void absorb_numerator(Polynomial p, unsigned exponent, bool reduce);
  void cancel_common();
  void reduce_cross();

  VarContext context_;
  Rational scale_;
  std::vector<Factor> num_;
  std::vector<Factor> den_;

  friend RationalFunction operator+(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
  friend RationalFunction operator-(const RationalFunction&);
  friend RationalFunction inverse(const RationalFunction&);
  friend RationalFunction pow(const RationalFunction&, unsigned);
  friend bool rf_eq(const RationalFunction&, const RationalFunction&);
  friend RationalFunction pullback_images(const Polynomial&, std::span<const RationalFunction>);
};

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
RationalFunction operator-(const RationalFunction& a);
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
// Throws NotInvertible when the divisor is zero.
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
RationalFunction inverse(const RationalFunction& a);
RationalFunction pow(const RationalFunction& a, unsigned exponent);

// a.num * b.den == b.num * a.den as canonical polynomials.
bool rf_eq(const RationalFunction& a, const RationalFunction& b);
inline bool operator==(const RationalFunction& a, const RationalFunction& b) { return rf_eq(a, b); }

// Throws PoleError when a denominator factor vanishes at the point.
Rational evaluate(const RationalFunction& r, std::span<const Rational> values);
Rational evaluate(const RationalFunction& r, const Point& point);

// Substitutes images[i] for context variable i of p. The common denominator
// is the product of each image denominator raised to that variable's degree
// in p; the numerator is then reduced against it by exact division.
RationalFunction pullback_images(const Polynomial& p, std::span<const RationalFunction> images);

}  // namespace hypcomp
