#pragma once

#include "hypcomp/rational_function.hpp"

#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace hypcomp {

// Immutable expression DAG over positional variables, used as the program of
// a morphism coordinate. Evaluating the program in the rational-function
// field keeps the factor structure (powers of P, Q, x_i) that an expanded
// numerator would lose, which is what keeps compositions small.
class Expr {
 public:
  enum class Kind { Variable, Constant, Polynomial, Add, Sub, Mul, Div, Neg, Pow };

  static Expr variable(std::size_t index);
  static Expr constant(Rational value);
  static Expr polynomial(Polynomial p);
  // scale * prod(num bases) / prod(den bases), one leaf per factor base.
  static Expr from(const RationalFunction& r);

  Kind kind() const noexcept;
  const void* id() const noexcept { return node_.get(); }

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);
  friend Expr pow(const Expr& base, unsigned exponent);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend class ExprEvaluator;
  friend class ExprSubstituter;
};

// Evaluates programs at fixed variable images, memoizing shared nodes.
class ExprEvaluator {
 public:
  // Images of the positional variables, all over one target context.
  explicit ExprEvaluator(std::vector<RationalFunction> images, bool identity = false);

  RationalFunction operator()(const Expr& e);

 private:
  std::vector<RationalFunction> images_;
  bool identity_;
  std::unordered_map<const void*, RationalFunction> memo_;
  std::vector<Expr> keep_alive_;  // memo keys stay valid while cached
};

// Replaces variable leaves by other programs (composition of programs).
class ExprSubstituter {
 public:
  explicit ExprSubstituter(std::vector<Expr> images) : images_(std::move(images)) {}

  Expr operator()(const Expr& e);

 private:
  std::vector<Expr> images_;
  std::unordered_map<const void*, Expr> memo_;
  std::vector<Expr> keep_alive_;
};

}  // namespace hypcomp
