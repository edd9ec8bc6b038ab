#include "hypcomp/morphism.hpp"

#include "hypcomp/errors.hpp"

#include <algorithm>
#include <string>

namespace hypcomp {

namespace {

std::vector<RationalFunction> identity_images(const VarContext& ctx) {
  std::vector<RationalFunction> images;
  images.reserve(ctx.arity());
  for (std::size_t i = 0; i < ctx.arity(); ++i) images.emplace_back(Polynomial::variable(ctx, i));
  return images;
}

}  // namespace

Morphism::Morphism(VarContext domain, VarContext codomain, std::vector<RationalFunction> entries,
                   std::vector<Expr> programs)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      entries_(std::move(entries)),
      programs_(std::move(programs)) {}

Morphism::Morphism(VarContext domain, VarContext codomain, std::vector<RationalFunction> entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), entries_(std::move(entries)) {
  if (entries_.size() != codomain_.arity())
    throw ContextMismatch("morphism needs one coordinate per codomain variable");
  for (const auto& e : entries_) require_same_context(domain_, e.context(), "morphism coordinate");
  programs_.reserve(entries_.size());
  for (const auto& e : entries_) programs_.push_back(Expr::from(e));
}

Morphism::Morphism(VarContext domain, VarContext codomain, std::vector<Expr> programs)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), programs_(std::move(programs)) {
  if (programs_.size() != codomain_.arity())
    throw ContextMismatch("morphism needs one coordinate per codomain variable");
  ExprEvaluator eval(identity_images(domain_), true);
  entries_.reserve(programs_.size());
  for (const auto& p : programs_) entries_.push_back(eval(p));
}

Morphism Morphism::identity(const VarContext& context) {
  std::vector<Expr> programs;
  for (std::size_t i = 0; i < context.arity(); ++i) programs.push_back(Expr::variable(i));
  return Morphism(context, context, identity_images(context), std::move(programs));
}

RationalFunction pullback(const Polynomial& p, const Morphism& f) {
  require_same_context(p.context(), f.codomain(), "pullback");
  return pullback_images(p, f.entries());
}

RationalFunction pullback(const RationalFunction& r, const Morphism& f) {
  require_same_context(r.context(), f.codomain(), "pullback");
  RationalFunction out(Polynomial(f.domain(), r.scale()));
  for (const auto& fac : r.numerator_factors()) out = out * pow(pullback(fac.base, f), fac.exponent);
  for (const auto& fac : r.denominator_factors()) out = out / pow(pullback(fac.base, f), fac.exponent);
  return out;
}

Morphism compose(const Morphism& f, const Morphism& g, const ComposeOptions& options) {
  require_same_context(f.domain(), g.codomain(), "compose");
  ExprEvaluator eval(std::vector<RationalFunction>(g.entries().begin(), g.entries().end()));
  ExprSubstituter subst(std::vector<Expr>(g.programs().begin(), g.programs().end()));
  std::vector<RationalFunction> entries;
  std::vector<Expr> programs;
  for (std::size_t i = 0; i < f.programs().size(); ++i) {
    auto e = eval(f.programs()[i]);
    const unsigned d = std::max(e.numerator_degree(), e.denominator_degree());
    if (d > options.degree_cap)
      throw DegreeCapExceeded("composed coordinate " + std::to_string(i) + " reached degree " + std::to_string(d));
    entries.push_back(std::move(e));
    programs.push_back(subst(f.programs()[i]));
  }
  return Morphism(g.domain(), f.codomain(), std::move(entries), std::move(programs));
}

bool is_identity(const Morphism& f) {
  if (!(f.domain() == f.codomain())) return false;
  for (std::size_t i = 0; i < f.entries().size(); ++i)
    if (!rf_eq(f.entries()[i], RationalFunction(Polynomial::variable(f.domain(), i)))) return false;
  return true;
}

bool equal_coordinates(const Morphism& f, const Morphism& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) return false;
  for (std::size_t i = 0; i < f.entries().size(); ++i)
    if (!rf_eq(f.entries()[i], g.entries()[i])) return false;
  return true;
}

unsigned max_degree(const Morphism& f) {
  unsigned d = 0;
  for (const auto& e : f.entries()) d = std::max({d, e.numerator_degree(), e.denominator_degree()});
  return d;
}

std::vector<Rational> apply(const Morphism& f, std::span<const Rational> point) {
  std::vector<Rational> out;
  out.reserve(f.entries().size());
  for (const auto& e : f.entries()) out.push_back(evaluate(e, point));
  return out;
}

}  // namespace hypcomp
