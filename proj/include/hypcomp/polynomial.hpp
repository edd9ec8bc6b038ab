#pragma once

#include "hypcomp/monomial.hpp"
#include "hypcomp/rational.hpp"
#include "hypcomp/var_context.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypcomp {

// Association variable name -> value, used for evaluation points.
using Point = std::map<std::string, Rational, std::less<>>;

struct Term {
  Monomial monomial;
  Rational coefficient;
};

// Sparse multivariate polynomial with rational coefficients.
//
// Terms are stored in strictly decreasing graded-lex order with no zero
// coefficients, so two polynomials over the same context are equal exactly
// when their term vectors are equal. Values are immutable.
class Polynomial {
 public:
  explicit Polynomial(VarContext context);
  Polynomial(VarContext context, const Rational& constant);
  // Canonicalizes: sorts, merges repeated monomials and drops zeros.
  Polynomial(VarContext context, std::vector<Term> terms);

  static Polynomial variable(const VarContext& context, std::string_view name);
  static Polynomial variable(const VarContext& context, std::size_t index);
  static Polynomial monomial(const VarContext& context, Monomial m, Rational c);

  const VarContext& context() const noexcept { return context_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant value; zero for the zero polynomial. Requires is_constant().
  Rational constant_value() const;
  const Term& leading_term() const { return terms_.front(); }
  const Term& trailing_term() const { return terms_.back(); }

  // nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<unsigned> total_degree() const;
  unsigned degree_in(std::size_t variable) const;
  std::size_t hash() const noexcept { return hash_; }

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  struct Canonical {};
  Polynomial(VarContext context, std::vector<Term> terms, Canonical);
  void rehash();

  VarContext context_;
  std::vector<Term> terms_;
  std::size_t hash_ = 0;

  friend Polynomial operator+(const Polynomial&, const Polynomial&);
  friend Polynomial operator-(const Polynomial&, const Polynomial&);
  friend Polynomial operator-(const Polynomial&);
  friend Polynomial operator*(const Polynomial&, const Polynomial&);
  friend std::optional<Polynomial> exact_div(const Polynomial&, const Polynomial&);
  friend Polynomial partial_derivative(const Polynomial&, std::size_t);
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& p, unsigned exponent);
// Sum of many polynomials in one sort-and-merge pass.
Polynomial sum(const VarContext& context, std::span<const Polynomial> parts);

// Exact quotient a / b, or nullopt when b does not divide a.
// Throws DivisionByZero when b is zero.
std::optional<Polynomial> exact_div(const Polynomial& a, const Polynomial& b);

Polynomial partial_derivative(const Polynomial& p, std::size_t variable);
Polynomial partial_derivative(const Polynomial& p, std::string_view variable);

// Values are indexed by context position.
Rational evaluate(const Polynomial& p, std::span<const Rational> values);
// Throws MissingBinding when the point lacks a context variable.
Rational evaluate(const Polynomial& p, const Point& point);

// Simultaneous substitution. Every variable occurring in p needs an image;
// all images must share one target context.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial, std::less<>>& images);
// Positional form: images[i] replaces context variable i.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

// Re-expresses p over a context containing all of its occurring variables.
Polynomial embed(const Polynomial& p, const VarContext& target);

// Scales p so its leading coefficient is one. Returns the removed factor.
Rational make_monic(Polynomial& p);

}  // namespace hypcomp
