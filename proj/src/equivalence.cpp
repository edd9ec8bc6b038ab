#include "hypcomp/equivalence.hpp"

#include "hypcomp/errors.hpp"

#include <map>
#include <numeric>

namespace hypcomp {

namespace {

using Coefficients = std::map<long, Rational>;

Coefficients coefficients(const Polynomial& q) {
  const auto& ctx = q.context();
  if (ctx.arity() != 1 || ctx.name(0) != "t") throw Unsupported("equivalence expects polynomials in t alone");
  Coefficients out;
  for (const auto& term : q.terms()) out.emplace(static_cast<long>(term.monomial[0]), term.coefficient);
  return out;
}

bool same_support(const Coefficients& a, const Coefficients& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
    if (ia->first != ib->first) return false;
  return true;
}

EquivalenceVerdict refuse(std::string reason) {
  EquivalenceVerdict v;
  v.equivalent = false;
  v.reason = std::move(reason);
  return v;
}

EquivalenceVerdict accept(MuSpec mu, LambdaSpec lambda) {
  EquivalenceVerdict v;
  v.equivalent = true;
  v.mu = std::move(mu);
  v.lambda = std::move(lambda);
  return v;
}

// Floor division for possibly negative exponents.
long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::optional<Rational> rational_root(const Rational& s, unsigned long g) {
  if (g == 0) return std::nullopt;
  if (g == 1) return s;
  if (s < 0 && g % 2 == 0) return std::nullopt;
  mpz_class num, den;
  if (mpz_root(num.get_mpz_t(), s.get_num_mpz_t(), g) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), s.get_den_mpz_t(), g) == 0) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

EquivalenceVerdict decide_equivalence(const Polynomial& q1, const Rational& c1, const Polynomial& q2,
                                      const Rational& c2) {
  const Coefficients a = coefficients(q1);
  const Coefficients b = coefficients(q2);

  if ((c1 == 0) != (c2 == 0)) return refuse("exactly one of c1, c2 is zero");
  if (a.empty() != b.empty()) return refuse("exactly one of q1, q2 is the zero polynomial");

  if (c1 != 0) {
    const Rational mu = c1 / c2;
    if (a.empty()) return accept(mu, {Rational(1), 0});
    if (!same_support(a, b)) return refuse("mu is forced to c1/c2 = " + to_string(mu) + " and the supports differ");
    const auto& [i0, a0] = *a.begin();
    const Rational lambda = b.at(i0) / (a0 * pow(mu, i0));
    for (const auto& [i, ai] : a)
      if (b.at(i) != lambda * ai * pow(mu, i))
        return refuse("mu is forced to c1/c2 = " + to_string(mu) + " and q2 is not proportional to q1(mu t)");
    return accept(mu, {lambda, 0});
  }

  if (a.empty()) return accept(Rational(1), {Rational(1), 0});
  if (!same_support(a, b)) return refuse("q1 and q2 have different supports");
  const auto& [i0, a0] = *a.begin();
  const Rational b0 = b.at(i0);
  if (a.size() == 1) return accept(Rational(1), {b0 / a0, 0});

  // mu^(i - i0) = r_i for every other exponent; combine via Bezout.
  long g = 0;
  std::map<long, long> combo;  // exponent difference -> Bezout coefficient
  for (auto it = std::next(a.begin()); it != a.end(); ++it) {
    const long d = it->first - i0;
    if (g == 0) {
      g = d;
      combo[d] = 1;
      continue;
    }
    // Extended gcd of (g, d): x*g + y*d = gcd.
    long old_r = g, r = d, old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
      const long q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_x = std::exchange(x, old_x - q * x);
      old_y = std::exchange(y, old_y - q * y);
    }
    for (auto& [key, c] : combo) c *= old_x;
    combo[d] += old_y;
    g = old_r;
  }

  auto ratio = [&](long i) -> Rational { return (b.at(i) * a0) / (a.at(i) * b0); };
  Rational s(1);
  for (const auto& [d, c] : combo) s *= pow(ratio(i0 + d), c);
  for (auto it = std::next(a.begin()); it != a.end(); ++it) {
    const long d = it->first - i0;
    if (pow(s, d / g) != ratio(it->first))
      return refuse("the conditions mu^(i-i0) = r_i are inconsistent");
  }

  LambdaSpec lambda{b0 / a0, -i0};
  const auto ug = static_cast<unsigned long>(g);
  if (auto root = rational_root(s, ug)) return accept(*root, {lambda.coefficient * pow(*root, -i0), 0});
  return accept(Radical{ug, s}, lambda);
}

bool verify_equivalence_witness(const Polynomial& q1, const Rational& c1, const Polynomial& q2, const Rational& c2,
                                const EquivalenceVerdict& verdict) {
  if (!verdict.equivalent) return false;
  if (const auto* mu = std::get_if<Rational>(&verdict.mu)) {
    if (*mu == 0 || verdict.lambda.coefficient == 0) return false;
    if (c2 * *mu != c1) return false;
    const Rational lambda = verdict.lambda.coefficient * pow(*mu, verdict.lambda.mu_power);
    const auto& ctx = q1.context();
    const Polynomial scaled_t = Polynomial::variable(ctx, 0).scaled(*mu);
    const Polynomial image = substitute(q1, std::span<const Polynomial>(&scaled_t, 1)).scaled(lambda);
    return embed(image, q2.context()) == q2;
  }

  const Radical& rad = std::get<Radical>(verdict.mu);
  if (rad.g == 0 || rad.s == 0 || verdict.lambda.coefficient == 0) return false;
  const long g = static_cast<long>(rad.g);
  // c2 * mu = c1 in Q[mu]/(mu^g - s).
  if (g == 1) {
    if (c2 * rad.s != c1) return false;
  } else if (c1 != 0 || c2 != 0) {
    return false;
  }
  // lambda * q1(mu t) expressed in the basis mu^j t^i, j < g.
  std::map<std::pair<long, long>, Rational> lhs;
  for (const auto& [i, ai] : coefficients(q1)) {
    const long e = i + verdict.lambda.mu_power;
    const long j = ((e % g) + g) % g;
    lhs[{i, j}] += verdict.lambda.coefficient * ai * pow(rad.s, floor_div(e, g));
  }
  const Coefficients b = coefficients(q2);
  for (const auto& [key, value] : lhs) {
    const auto [i, j] = key;
    const Rational expected = j == 0 && b.count(i) ? b.at(i) : Rational(0);
    if (value != expected) return false;
  }
  for (const auto& [i, bi] : b)
    if (!lhs.count({i, 0})) return false;
  return true;
}

std::string to_string(const MuSpec& mu) {
  if (const auto* r = std::get_if<Rational>(&mu)) return to_string(*r);
  const auto& rad = std::get<Radical>(mu);
  return "root of mu^" + std::to_string(rad.g) + " = " + to_string(rad.s);
}

std::string to_string(const LambdaSpec& lambda) {
  if (lambda.mu_power == 0) return to_string(lambda.coefficient);
  return to_string(lambda.coefficient) + "*mu^" + std::to_string(lambda.mu_power);
}

}  // namespace hypcomp
