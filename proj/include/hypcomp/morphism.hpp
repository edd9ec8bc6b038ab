#pragma once

#include "hypcomp/expr.hpp"
#include "hypcomp/rational_function.hpp"

#include <span>
#include <vector>

namespace hypcomp {

// Rational map domain -> codomain, one coordinate per codomain variable.
//
// Each coordinate is kept both as an explicit RationalFunction over the
// domain context and as the program it was built from. Parameters such as the
// symbolic alpha are ordinary context variables mapped to themselves.
class Morphism {
 public:
  Morphism(VarContext domain, VarContext codomain, std::vector<RationalFunction> entries);
  Morphism(VarContext domain, VarContext codomain, std::vector<Expr> programs);

  static Morphism identity(const VarContext& context);

  const VarContext& domain() const noexcept { return domain_; }
  const VarContext& codomain() const noexcept { return codomain_; }
  std::span<const RationalFunction> entries() const noexcept { return entries_; }
  const RationalFunction& entry(std::size_t i) const { return entries_.at(i); }
  std::span<const Expr> programs() const noexcept { return programs_; }

 private:
  Morphism(VarContext domain, VarContext codomain, std::vector<RationalFunction> entries, std::vector<Expr> programs);

  VarContext domain_;
  VarContext codomain_;
  std::vector<RationalFunction> entries_;
  std::vector<Expr> programs_;

  friend Morphism compose(const Morphism&, const Morphism&, const struct ComposeOptions&);
};

struct ComposeOptions {
  // Largest numerator or denominator total degree tolerated in a composed
  // coordinate before DegreeCapExceeded is raised.
  unsigned degree_cap = 1024;
};

// p o f, with p over f's codomain. Throws ContextMismatch.
RationalFunction pullback(const Polynomial& p, const Morphism& f);
RationalFunction pullback(const RationalFunction& r, const Morphism& f);

// f o g; requires codomain(g) == domain(f).
Morphism compose(const Morphism& f, const Morphism& g, const ComposeOptions& options = {});

// Coordinate-wise rf_eq against the identity map.
bool is_identity(const Morphism& f);
bool equal_coordinates(const Morphism& f, const Morphism& g);

// Largest numerator/denominator degree over all coordinates.
unsigned max_degree(const Morphism& f);

// Evaluates every coordinate at a domain point. Throws PoleError.
std::vector<Rational> apply(const Morphism& f, std::span<const Rational> point);

}  // namespace hypcomp
