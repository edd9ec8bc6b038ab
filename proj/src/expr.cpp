#include "hypcomp/expr.hpp"

#include "hypcomp/errors.hpp"

#include <optional>

namespace hypcomp {

struct Expr::Node {
  Kind kind;
  std::size_t index = 0;
  unsigned exponent = 0;
  Rational value;
  std::optional<Polynomial> poly;
  std::vector<Expr> children;
};

Expr Expr::variable(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->index = index;
  return Expr(std::move(n));
}

Expr Expr::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::polynomial(Polynomial p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Polynomial;
  n->poly = std::move(p);
  return Expr(std::move(n));
}

Expr Expr::from(const RationalFunction& r) {
  Expr num = constant(r.scale());
  for (const auto& f : r.numerator_factors()) num = num * pow(polynomial(f.base), f.exponent);
  if (r.is_polynomial()) return num;
  Expr den = constant(Rational(1));
  for (const auto& f : r.denominator_factors()) den = den * pow(polynomial(f.base), f.exponent);
  return num / den;
}

Expr::Kind Expr::kind() const noexcept { return node_->kind; }

Expr operator+(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::Add;
  n->children = {a, b};
  return Expr(std::move(n));
}

Expr operator-(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::Sub;
  n->children = {a, b};
  return Expr(std::move(n));
}

Expr operator*(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::Mul;
  n->children = {a, b};
  return Expr(std::move(n));
}

Expr operator/(const Expr& a, const Expr& b) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::Div;
  n->children = {a, b};
  return Expr(std::move(n));
}

Expr operator-(const Expr& a) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::Neg;
  n->children = {a};
  return Expr(std::move(n));
}

Expr pow(const Expr& base, unsigned exponent) {
  auto n = std::make_shared<Expr::Node>();
  n->kind = Expr::Kind::Pow;
  n->exponent = exponent;
  n->children = {base};
  return Expr(std::move(n));
}

ExprEvaluator::ExprEvaluator(std::vector<RationalFunction> images, bool identity)
    : images_(std::move(images)), identity_(identity) {
  if (images_.empty()) throw ContextMismatch("evaluator needs at least one variable image");
}

RationalFunction ExprEvaluator::operator()(const Expr& e) {
  const Expr::Node& n = *e.node_;
  if (auto it = memo_.find(&n); it != memo_.end()) return it->second;

  auto value = [&]() -> RationalFunction {
    const auto& ctx = images_.front().context();
    switch (n.kind) {
      case Expr::Kind::Variable:
        if (n.index >= images_.size()) throw ContextMismatch("program variable out of range");
        return images_[n.index];
      case Expr::Kind::Constant:
        return RationalFunction(Polynomial(ctx, n.value));
      case Expr::Kind::Polynomial:
        if (identity_) return RationalFunction(*n.poly);
        return pullback_images(*n.poly, images_);
      case Expr::Kind::Add:
        return (*this)(n.children[0]) + (*this)(n.children[1]);
      case Expr::Kind::Sub:
        return (*this)(n.children[0]) - (*this)(n.children[1]);
      case Expr::Kind::Mul:
        return (*this)(n.children[0]) * (*this)(n.children[1]);
      case Expr::Kind::Div:
        return (*this)(n.children[0]) / (*this)(n.children[1]);
      case Expr::Kind::Neg:
        return -(*this)(n.children[0]);
      case Expr::Kind::Pow:
        return pow((*this)(n.children[0]), n.exponent);
    }
    throw std::logic_error("unhandled expression kind");
  }();
  keep_alive_.push_back(e);
  return memo_.emplace(&n, std::move(value)).first->second;
}

Expr ExprSubstituter::operator()(const Expr& e) {
  const Expr::Node& n = *e.node_;
  if (auto it = memo_.find(&n); it != memo_.end()) return it->second;

  auto value = [&]() -> Expr {
    switch (n.kind) {
      case Expr::Kind::Variable:
        if (n.index >= images_.size()) throw ContextMismatch("program variable out of range");
        return images_[n.index];
      case Expr::Kind::Constant:
        return e;
      case Expr::Kind::Polynomial: {
        const Polynomial& p = *n.poly;
        if (p.is_constant()) return Expr::constant(p.is_zero() ? Rational(0) : p.constant_value());
        std::optional<Expr> acc;
        for (const auto& t : p.terms()) {
          Expr term = Expr::constant(t.coefficient);
          for (std::size_t v = 0; v < t.monomial.arity(); ++v)
            if (auto k = t.monomial[v]) term = term * pow(images_.at(v), k);
          acc = acc ? *acc + term : term;
        }
        return *acc;
      }
      case Expr::Kind::Add:
        return (*this)(n.children[0]) + (*this)(n.children[1]);
      case Expr::Kind::Sub:
        return (*this)(n.children[0]) - (*this)(n.children[1]);
      case Expr::Kind::Mul:
        return (*this)(n.children[0]) * (*this)(n.children[1]);
      case Expr::Kind::Div:
        return (*this)(n.children[0]) / (*this)(n.children[1]);
      case Expr::Kind::Neg:
        return -(*this)(n.children[0]);
      case Expr::Kind::Pow:
        return pow((*this)(n.children[0]), n.exponent);
    }
    throw std::logic_error("unhandled expression kind");
  }();
  keep_alive_.push_back(e);
  return memo_.emplace(&n, std::move(value)).first->second;
}

}  // namespace hypcomp
