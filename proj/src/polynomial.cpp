#include "hypcomp/polynomial.hpp"

#include "hypcomp/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace hypcomp {

namespace {

bool term_greater(const Term& a, const Term& b) { return a.monomial > b.monomial; }

std::size_t hash_rational(const Rational& r) {
  std::size_t h = mpz_get_ui(r.get_num_mpz_t()) * 31u + mpz_get_ui(r.get_den_mpz_t());
  return h ^ static_cast<std::size_t>(sgn(r) + 1) << 7;
}

// Merge two canonical term lists, b scaled by sign.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto cmp = a[i].monomial <=> b[j].monomial;
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].monomial, negate_b ? Rational(-b[j].coefficient) : b[j].coefficient});
      ++j;
    } else {
      Rational c = negate_b ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back({b[j].monomial, negate_b ? Rational(-b[j].coefficient) : b[j].coefficient});
  return out;
}

}  // namespace

Polynomial::Polynomial(VarContext context) : context_(std::move(context)) { rehash(); }

Polynomial::Polynomial(VarContext context, const Rational& constant) : context_(std::move(context)) {
  if (constant != 0) terms_.push_back({Monomial(context_.arity()), constant});
  rehash();
}

Polynomial::Polynomial(VarContext context, std::vector<Term> terms) : context_(std::move(context)) {
  for (const auto& t : terms)
    if (t.monomial.arity() != context_.arity())
      throw ContextMismatch("monomial arity does not match context arity");
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coefficient += t.coefficient;
    } else {
      if (!terms_.empty() && terms_.back().coefficient == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coefficient == 0) terms_.pop_back();
  rehash();
}

Polynomial::Polynomial(VarContext context, std::vector<Term> terms, Canonical)
    : context_(std::move(context)), terms_(std::move(terms)) {
  rehash();
}

void Polynomial::rehash() {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) h = h * 1000003u ^ (t.monomial.hash() + 0x9e3779b97f4a7c15ull * hash_rational(t.coefficient));
  hash_ = h;
}

Polynomial Polynomial::variable(const VarContext& context, std::string_view name) {
  return variable(context, context.index(name));
}

Polynomial Polynomial::variable(const VarContext& context, std::size_t index) {
  if (index >= context.arity()) throw UnknownVariable("#" + std::to_string(index));
  return monomial(context, Monomial::unit(context.arity(), index), Rational(1));
}

Polynomial Polynomial::monomial(const VarContext& context, Monomial m, Rational c) {
  std::vector<Term> t;
  t.push_back({std::move(m), std::move(c)});
  return Polynomial(context, std::move(t));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
  return terms_.empty() ? Rational(0) : terms_[0].coefficient;
}

std::optional<unsigned> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.degree();
}

unsigned Polynomial::degree_in(std::size_t variable) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.monomial[variable]);
  return d;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(context_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial, t.coefficient * c});
  return Polynomial(context_, std::move(out), Canonical{});
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(context_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a fixed monomial preserves the graded-lex order.
  for (const auto& t : terms_) out.push_back({t.monomial * m, t.coefficient * c});
  return Polynomial(context_, std::move(out), Canonical{});
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.hash_ != b.hash_ || a.terms_.size() != b.terms_.size()) return false;
  if (!(a.context_ == b.context_)) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.context_, b.context_, "add");
  return Polynomial(a.context_, merge_terms(a.terms_, b.terms_, false), Polynomial::Canonical{});
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.context_, b.context_, "sub");
  return Polynomial(a.context_, merge_terms(a.terms_, b.terms_, true), Polynomial::Canonical{});
}

Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.context_, b.context_, "mul");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.context_);
  if (a.size() == 1) return b.times_term(a.terms_[0].monomial, a.terms_[0].coefficient);
  if (b.size() == 1) return a.times_term(b.terms_[0].monomial, b.terms_[0].coefficient);

  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(std::min<std::size_t>(outer.size() * inner.size(), 1u << 20));
  Rational product;
  for (const auto& s : outer.terms_) {
    for (const auto& t : inner.terms_) {
      mpq_mul(product.get_mpq_t(), s.coefficient.get_mpq_t(), t.coefficient.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(s.monomial * t.monomial);
      if (inserted)
        it->second = product;
      else
        mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), product.get_mpq_t());
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, std::move(c)});
  std::sort(out.begin(), out.end(), term_greater);
  return Polynomial(a.context_, std::move(out), Polynomial::Canonical{});
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result(p.context(), Rational(1));
  if (exponent == 0) return result;
  if (p.size() == 1) {
    const auto& t = p.leading_term();
    Monomial m(p.context().arity());
    for (unsigned i = 0; i < exponent; ++i) m = m * t.monomial;
    return Polynomial::monomial(p.context(), std::move(m), hypcomp::pow(t.coefficient, exponent));
  }
  // Repeated multiplication by the (small) base beats squaring on sparse input.
  result = p;
  for (unsigned i = 1; i < exponent; ++i) result = result * p;
  return result;
}

Polynomial sum(const VarContext& context, std::span<const Polynomial> parts) {
  std::size_t n = 0;
  for (const auto& p : parts) {
    require_same_context(context, p.context(), "sum");
    n += p.size();
  }
  std::vector<Term> all;
  all.reserve(n);
  for (const auto& p : parts) all.insert(all.end(), p.terms().begin(), p.terms().end());
  return Polynomial(context, std::move(all));
}

std::optional<Polynomial> exact_div(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.context_, b.context_, "exact_div");
  if (b.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
  if (a.is_zero()) return Polynomial(a.context_);
  if (b.is_constant()) return a.scaled(Rational(1) / b.leading_term().coefficient);

  const auto& lead = b.terms_.front();
  const auto& trail = b.terms_.back();
  // Cheap necessary conditions: leading and trailing terms of a product are
  // the products of the factors' leading and trailing terms.
  if (!lead.monomial.divides(a.terms_.front().monomial)) return std::nullopt;
  if (!trail.monomial.divides(a.terms_.back().monomial)) return std::nullopt;
  for (std::size_t v = 0; v < a.context_.arity(); ++v)
    if (b.degree_in(v) > a.degree_in(v)) return std::nullopt;

  if (b.size() == 1) {
    std::vector<Term> q;
    q.reserve(a.size());
    Rational inv = Rational(1) / lead.coefficient;
    for (const auto& t : a.terms_) {
      if (!lead.monomial.divides(t.monomial)) return std::nullopt;
      q.push_back({lead.monomial.quotient_of(t.monomial), t.coefficient * inv});
    }
    return Polynomial(a.context_, std::move(q), Polynomial::Canonical{});
  }

  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : a.terms_) rem.emplace_hint(rem.end(), t.monomial, t.coefficient);
  const Rational inv = Rational(1) / lead.coefficient;
  std::vector<Term> quotient;
  Rational scratch;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.monomial.divides(top->first)) return std::nullopt;
    Monomial qm = lead.monomial.quotient_of(top->first);
    Rational qc = top->second * inv;
    rem.erase(top);
    for (std::size_t i = 1; i < b.terms_.size(); ++i) {
      const auto& bt = b.terms_[i];
      mpq_mul(scratch.get_mpq_t(), qc.get_mpq_t(), bt.coefficient.get_mpq_t());
      auto [it, inserted] = rem.try_emplace(qm * bt.monomial);
      if (inserted) {
        mpq_neg(it->second.get_mpq_t(), scratch.get_mpq_t());
      } else {
        mpq_sub(it->second.get_mpq_t(), it->second.get_mpq_t(), scratch.get_mpq_t());
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  return Polynomial(a.context_, std::move(quotient), Polynomial::Canonical{});
}

Polynomial partial_derivative(const Polynomial& p, std::size_t variable) {
  if (variable >= p.context_.arity()) throw UnknownVariable("#" + std::to_string(variable));
  std::vector<Term> out;
  for (const auto& t : p.terms_) {
    auto e = t.monomial[variable];
    if (e == 0) continue;
    out.push_back({t.monomial.with_exponent(variable, e - 1), t.coefficient * e});
  }
  // Differentiation can reorder terms under graded-lex, so re-canonicalize.
  return Polynomial(p.context_, std::move(out));
}

Polynomial partial_derivative(const Polynomial& p, std::string_view variable) {
  return partial_derivative(p, p.context().index(variable));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> values) {
  const auto n = p.context().arity();
  if (values.size() != n) throw MissingBinding("evaluation point has wrong arity");
  std::vector<std::vector<Rational>> powers(n);
  for (std::size_t v = 0; v < n; ++v) {
    const unsigned d = p.degree_in(v);
    powers[v].reserve(d + 1);
    powers[v].emplace_back(1);
    for (unsigned e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * values[v]);
  }
  Rational sum, term;
  for (const auto& t : p.terms()) {
    term = t.coefficient;
    for (std::size_t v = 0; v < n; ++v)
      if (auto e = t.monomial[v]) term *= powers[v][e];
    sum += term;
  }
  return sum;
}

Rational evaluate(const Polynomial& p, const Point& point) {
  std::vector<Rational> values;
  values.reserve(p.context().arity());
  for (const auto& name : p.context().names()) {
    auto it = point.find(name);
    if (it == point.end()) throw MissingBinding("no value bound for variable '" + name + "'");
    values.push_back(it->second);
  }
  return evaluate(p, values);
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  const auto n = p.context().arity();
  if (images.size() != n) throw MissingBinding("substitution needs one image per context variable");
  std::optional<VarContext> target;
  for (std::size_t v = 0; v < n; ++v) {
    if (p.degree_in(v) == 0) continue;
    if (!target)
      target = images[v].context();
    else
      require_same_context(*target, images[v].context(), "substitute");
  }
  if (!target) {
    // p is constant; any image fixes the target context.
    if (n == 0) return p;
    return Polynomial(images[0].context(), p.is_zero() ? Rational(0) : p.constant_value());
  }
  std::vector<std::vector<Polynomial>> powers(n);
  std::vector<Polynomial> parts;
  parts.reserve(p.size());
  for (const auto& t : p.terms()) {
    Polynomial term(*target, t.coefficient);
    for (std::size_t v = 0; v < n; ++v) {
      const auto e = t.monomial[v];
      if (e == 0) continue;
      auto& cache = powers[v];
      if (cache.empty()) cache.emplace_back(*target, Rational(1));
      while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
      term = term * cache[e];
    }
    parts.push_back(std::move(term));
  }
  return sum(*target, parts);
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial, std::less<>>& images) {
  const auto& ctx = p.context();
  std::vector<Polynomial> positional;
  positional.reserve(ctx.arity());
  std::optional<VarContext> target;
  for (const auto& [name, img] : images) {
    if (!target) target = img.context();
    else require_same_context(*target, img.context(), "substitute");
  }
  for (std::size_t v = 0; v < ctx.arity(); ++v) {
    auto it = images.find(ctx.name(v));
    if (it != images.end()) {
      positional.push_back(it->second);
    } else if (p.degree_in(v) > 0) {
      throw MissingBinding("no image given for variable '" + ctx.name(v) + "'");
    } else {
      positional.emplace_back(target ? *target : ctx);
    }
  }
  return substitute(p, positional);
}

Polynomial embed(const Polynomial& p, const VarContext& target) {
  const auto& src = p.context();
  std::vector<std::size_t> map(src.arity());
  for (std::size_t v = 0; v < src.arity(); ++v) {
    auto idx = target.find(src.name(v));
    if (!idx) {
      if (p.degree_in(v) > 0) throw UnknownVariable(src.name(v));
      map[v] = static_cast<std::size_t>(-1);
    } else {
      map[v] = *idx;
    }
  }
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target.arity());
    for (std::size_t v = 0; v < src.arity(); ++v)
      if (t.monomial[v]) m = m * Monomial::unit(target.arity(), map[v], t.monomial[v]);
    out.push_back({std::move(m), t.coefficient});
  }
  return Polynomial(target, std::move(out));
}

Rational make_monic(Polynomial& p) {
  if (p.is_zero()) return Rational(0);
  Rational lc = p.leading_term().coefficient;
  if (lc != 1) p = p.scaled(Rational(1) / lc);
  return lc;
}

}  // namespace hypcomp
