#include "hypcomp/rational_function.hpp"

#include "hypcomp/errors.hpp"

#include <algorithm>

namespace hypcomp {

namespace {

using FactorList = std::vector<Factor>;

FactorList::iterator find_base(FactorList& list, const Polynomial& base) {
  return std::find_if(list.begin(), list.end(), [&](const Factor& f) { return f.base == base; });
}

FactorList::const_iterator find_base(const FactorList& list, const Polynomial& base) {
  return std::find_if(list.begin(), list.end(), [&](const Factor& f) { return f.base == base; });
}

void multiply_into(FactorList& list, const Polynomial& base, unsigned exponent) {
  if (exponent == 0) return;
  if (auto it = find_base(list, base); it != list.end())
    it->exponent += exponent;
  else
    list.push_back({base, exponent});
}

void drop_empty(FactorList& list) {
  std::erase_if(list, [](const Factor& f) { return f.exponent == 0; });
}

// list / common, where every factor of common occurs in list.
FactorList divide_out(const FactorList& list, const FactorList& common) {
  FactorList out = list;
  for (const auto& c : common) find_base(out, c.base)->exponent -= c.exponent;
  drop_empty(out);
  return out;
}

Polynomial expand(const VarContext& ctx, const FactorList& list) {
  Polynomial p(ctx, Rational(1));
  for (const auto& f : list) p = p * pow(f.base, f.exponent);
  return p;
}

void cancel_between(FactorList& a, FactorList& b) {
  for (auto& fa : a) {
    auto it = find_base(b, fa.base);
    if (it == b.end()) continue;
    unsigned m = std::min(fa.exponent, it->exponent);
    fa.exponent -= m;
    it->exponent -= m;
  }
  drop_empty(a);
  drop_empty(b);
}

// Collapses repeated bases after factors were rewritten in place.
void merge_duplicates(FactorList& list) {
  FactorList out;
  for (auto& f : list) multiply_into(out, f.base, f.exponent);
  list = std::move(out);
}

// Divides a simple numerator factor by a denominator factor as often as the
// division is exact. Returns true if anything changed.
bool divide_factor(Factor& n, Factor& d, Rational& scale) {
  bool changed = false;
  while (n.exponent == 1 && d.exponent > 0 && !n.base.is_constant()) {
    auto q = exact_div(n.base, d.base);
    if (!q) break;
    n.base = std::move(*q);
    --d.exponent;
    changed = true;
  }
  if (changed) {
    if (n.base.is_constant()) {
      scale *= n.base.constant_value();
      n.exponent = 0;
    } else {
      scale *= make_monic(n.base);
    }
  }
  return changed;
}

}  // namespace

RationalFunction::RationalFunction(VarContext context, Rational scale, std::vector<Factor> num, std::vector<Factor> den)
    : context_(std::move(context)), scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)) {}

RationalFunction::RationalFunction(const Polynomial& numerator)
    : context_(numerator.context()), scale_(1) {
  absorb_numerator(numerator, 1, false);
}

RationalFunction::RationalFunction(const Polynomial& numerator, const Polynomial& denominator)
    : context_(numerator.context()), scale_(1) {
  require_same_context(numerator.context(), denominator.context(), "rational function");
  if (denominator.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (denominator.is_constant()) {
    scale_ = Rational(1) / denominator.constant_value();
  } else {
    Polynomial d = denominator;
    scale_ = Rational(1) / make_monic(d);
    den_.push_back({std::move(d), 1});
  }
  absorb_numerator(numerator, 1, true);
}

void RationalFunction::absorb_numerator(Polynomial p, unsigned exponent, bool reduce) {
  if (p.is_zero()) {
    scale_ = 0;
    num_.clear();
    den_.clear();
    return;
  }
  if (reduce && exponent == 1) {
    Factor f{std::move(p), 1};
    Rational s(1);
    for (auto& d : den_) divide_factor(f, d, s);
    drop_empty(den_);
    scale_ *= s;
    if (f.exponent == 0) return;
    p = std::move(f.base);
  }
  if (p.is_constant()) {
    scale_ *= hypcomp::pow(p.constant_value(), static_cast<long>(exponent));
    return;
  }
  Rational lc = make_monic(p);
  scale_ *= hypcomp::pow(lc, static_cast<long>(exponent));
  multiply_into(num_, p, exponent);
  cancel_common();
}

void RationalFunction::cancel_common() { cancel_between(num_, den_); }

void RationalFunction::reduce_cross() {
  bool changed = false;
  for (auto& n : num_)
    for (auto& d : den_) changed |= divide_factor(n, d, scale_);
  if (!changed) return;
  drop_empty(num_);
  drop_empty(den_);
  merge_duplicates(num_);
  cancel_common();
}

Polynomial RationalFunction::numerator() const { return expand(context_, num_).scaled(scale_); }

Polynomial RationalFunction::denominator() const { return expand(context_, den_); }

unsigned RationalFunction::numerator_degree() const {
  unsigned d = 0;
  for (const auto& f : num_) d += f.exponent * f.base.total_degree().value_or(0);
  return d;
}

unsigned RationalFunction::denominator_degree() const {
  unsigned d = 0;
  for (const auto& f : den_) d += f.exponent * f.base.total_degree().value_or(0);
  return d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  require_same_context(a.context_, b.context_, "rf_add");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;

  FactorList common;
  for (const auto& fa : a.num_)
    if (auto it = find_base(b.num_, fa.base); it != b.num_.end())
      common.push_back({fa.base, std::min(fa.exponent, it->exponent)});

  FactorList lcm = a.den_;
  for (const auto& fb : b.den_) {
    if (auto it = find_base(lcm, fb.base); it != lcm.end())
      it->exponent = std::max(it->exponent, fb.exponent);
    else
      lcm.push_back(fb);
  }

  const auto& ctx = a.context_;
  Polynomial ta = (expand(ctx, divide_out(a.num_, common)) * expand(ctx, divide_out(lcm, a.den_))).scaled(a.scale_);
  Polynomial tb = (expand(ctx, divide_out(b.num_, common)) * expand(ctx, divide_out(lcm, b.den_))).scaled(b.scale_);

  RationalFunction out(ctx, Rational(1), std::move(common), std::move(lcm));
  out.absorb_numerator(ta + tb, 1, true);
  return out;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.scale_ = -out.scale_;
  return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  require_same_context(a.context_, b.context_, "rf_mul");
  if (a.is_zero() || b.is_zero()) return RationalFunction(Polynomial(a.context_));
  RationalFunction out(a.context_, a.scale_ * b.scale_, a.num_, a.den_);
  for (const auto& f : b.num_) multiply_into(out.num_, f.base, f.exponent);
  for (const auto& f : b.den_) multiply_into(out.den_, f.base, f.exponent);
  out.cancel_common();
  out.reduce_cross();
  return out;
}

RationalFunction inverse(const RationalFunction& a) {
  if (a.is_zero()) throw NotInvertible("inverse of the zero rational function");
  return RationalFunction(a.context_, Rational(1) / a.scale_, a.den_, a.num_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * inverse(b); }

RationalFunction pow(const RationalFunction& a, unsigned exponent) {
  if (exponent == 0) return RationalFunction(Polynomial(a.context_, Rational(1)));
  RationalFunction out = a;
  out.scale_ = hypcomp::pow(a.scale_, static_cast<long>(exponent));
  for (auto& f : out.num_) f.exponent *= exponent;
  for (auto& f : out.den_) f.exponent *= exponent;
  return out;
}

bool rf_eq(const RationalFunction& a, const RationalFunction& b) {
  require_same_context(a.context_, b.context_, "rf_eq");
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  FactorList left = a.num_, right = b.num_;
  for (const auto& f : b.den_) multiply_into(left, f.base, f.exponent);
  for (const auto& f : a.den_) multiply_into(right, f.base, f.exponent);
  cancel_between(left, right);
  return expand(a.context_, left).scaled(a.scale_) == expand(a.context_, right).scaled(b.scale_);
}

Rational evaluate(const RationalFunction& r, std::span<const Rational> values) {
  Rational den(1);
  for (const auto& f : r.denominator_factors()) {
    Rational v = evaluate(f.base, values);
    if (v == 0) throw PoleError("denominator vanishes at the evaluation point");
    den *= hypcomp::pow(v, f.exponent);
  }
  Rational num = r.scale();
  for (const auto& f : r.numerator_factors()) num *= hypcomp::pow(evaluate(f.base, values), f.exponent);
  return num / den;
}

Rational evaluate(const RationalFunction& r, const Point& point) {
  std::vector<Rational> values;
  for (const auto& name : r.context().names()) {
    auto it = point.find(name);
    if (it == point.end()) throw MissingBinding("no value bound for variable '" + name + "'");
    values.push_back(it->second);
  }
  return evaluate(r, values);
}

RationalFunction pullback_images(const Polynomial& p, std::span<const RationalFunction> images) {
  const auto n = p.context().arity();
  if (images.size() != n) throw ContextMismatch("pullback needs one image per codomain variable");
  if (n == 0) throw ContextMismatch("pullback over an empty context");
  const VarContext& target = images[0].context();
  for (const auto& img : images) require_same_context(target, img.context(), "pullback");

  std::vector<unsigned> degree(n);
  FactorList den;
  std::vector<std::vector<Polynomial>> num_powers(n), den_powers(n);
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = p.degree_in(v);
    if (degree[v] == 0) continue;
    const auto& img = images[v];
    for (const auto& f : img.den_) multiply_into(den, f.base, f.exponent * degree[v]);
    num_powers[v].emplace_back(target, Rational(1));
    num_powers[v].push_back(img.numerator());
    den_powers[v].emplace_back(target, Rational(1));
    if (!img.den_.empty()) den_powers[v].push_back(img.denominator());
  }
  auto power_of = [](std::vector<Polynomial>& cache, unsigned e) -> const Polynomial& {
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  std::vector<Polynomial> parts;
  parts.reserve(p.size());
  for (const auto& t : p.terms()) {
    Polynomial term(target, t.coefficient);
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 0) continue;
      const unsigned e = t.monomial[v];
      if (e > 0) term = term * power_of(num_powers[v], e);
      if (den_powers[v].size() > 1 && degree[v] > e) term = term * power_of(den_powers[v], degree[v] - e);
    }
    parts.push_back(std::move(term));
  }
  RationalFunction out(target, Rational(1), {}, std::move(den));
  out.absorb_numerator(sum(target, parts), 1, true);
  return out;
}

}  // namespace hypcomp
