#pragma once

#include "hypcomp/family.hpp"
#include "hypcomp/polynomial.hpp"
#include "hypcomp/report.hpp"
#include "hypcomp/textio.hpp"

#include <fstream>
#include <random>
#include <string>

namespace testing {

using namespace hypcomp;

inline const Json& oracle() {
  static const Json data = [] {
    std::ifstream in(HYPCOMP_ORACLE_FILE);
    if (!in) throw std::runtime_error("cannot open oracle fixture " HYPCOMP_ORACLE_FILE);
    return Json::parse(in);
  }();
  return data;
}

// Builds {"vars": [...], "terms": [[exponents], "p/q"]} and embeds it in ctx.
inline Polynomial from_oracle(const Json& j, const VarContext& ctx) {
  std::vector<std::string> vars = j["vars"].get<std::vector<std::string>>();
  const VarContext own(vars);
  std::vector<Term> terms;
  for (const auto& t : j["terms"]) {
    Monomial m(vars.size());
    const auto exps = t[0].get<std::vector<unsigned>>();
    for (std::size_t i = 0; i < exps.size(); ++i) m = m.with_exponent(i, exps[i]);
    terms.push_back({m, parse_rational(t[1].get<std::string>())});
  }
  return embed(Polynomial(own, std::move(terms)), ctx);
}

inline VarContext context_of(const Json& j) { return VarContext(j["vars"].get<std::vector<std::string>>()); }

inline Polynomial random_polynomial(std::mt19937_64& rng, const VarContext& ctx, int max_terms = 5,
                                    unsigned max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<Term> terms;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m(ctx.arity());
    for (std::size_t v = 0; v < ctx.arity(); ++v) m = m.with_exponent(v, exp(rng));
    terms.push_back({m, random_small_rational(rng, 9)});
  }
  return Polynomial(ctx, std::move(terms));
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> pt(n);
  for (auto& v : pt) v = random_small_rational(rng);
  return pt;
}

inline Point as_point(const VarContext& ctx, const std::vector<Rational>& values) {
  Point p;
  for (std::size_t i = 0; i < ctx.arity(); ++i) p.emplace(ctx.name(i), values[i]);
  return p;
}

}  // namespace testing
