#include "hypcomp/family.hpp"

#include "hypcomp/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hypcomp {

namespace {

// Programs for the building blocks of Phi and Psi over family_context.
struct Blocks {
  std::vector<Expr> x;
  Expr y, z, alpha, u, w, q, p;
};

Blocks blocks(const FamilyParams& params) {
  const unsigned m = params.m;
  std::vector<Expr> x;
  for (unsigned i = 0; i < m; ++i) x.push_back(Expr::variable(i));
  Expr y = Expr::variable(m);
  Expr z = Expr::variable(m + 1);
  Expr alpha = params.alpha.is_symbolic() ? Expr::variable(m + 2) : Expr::constant(*params.alpha.value);
  Expr u = x[0];
  for (unsigned i = 1; i < m; ++i) u = u * x[i];
  Expr w = z * z - alpha;
  Expr q = u * u * y + w + u;
  Expr p = u * u * y + w + u * pow(w, params.k);
  return {std::move(x), y, z, alpha, u, w, q, p};
}

Polynomial alpha_polynomial(const VarContext& ctx, const Alpha& alpha) {
  return alpha.is_symbolic() ? Polynomial::variable(ctx, "a") : Polynomial(ctx, *alpha.value);
}

Polynomial product_of_x(const VarContext& ctx, unsigned m) {
  Monomial mono(ctx.arity());
  for (unsigned i = 0; i < m; ++i) mono = mono.with_exponent(i, 1);
  return Polynomial::monomial(ctx, mono, Rational(1));
}

std::optional<Polynomial> try_quotient(const FamilyParams& params, Side side) {
  const Polynomial s = side == Side::P ? make_hypersurface(params) : make_reference(params);
  const VarContext& ctx = s.context();
  const Polynomial z = Polynomial::variable(ctx, "z");
  const Polynomial w = z * z - alpha_polynomial(ctx, params.alpha);
  const Polynomial numerator = pow(s, params.k) - pow(w, params.k);
  const Polynomial u = product_of_x(ctx, params.m);
  auto q = exact_div(numerator, u);
  if (q && !(*q * u == numerator)) return std::nullopt;
  return q;
}

bool safe_check(auto&& body) {
  try {
    return body();
  } catch (const AlgebraError&) {
    return false;
  }
}

}  // namespace

std::string Alpha::to_string() const { return value ? hypcomp::to_string(*value) : "sym"; }

Alpha Alpha::parse(std::string_view text) {
  if (text == "sym") return symbolic();
  return rational(parse_rational(text));
}

void validate(const FamilyParams& params) {
  if (params.m < 1) throw std::invalid_argument("m must be at least 1");
}

VarContext family_context(unsigned m, bool symbolic_alpha) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  std::vector<std::string> names;
  for (unsigned i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  names.emplace_back("y");
  names.emplace_back("z");
  if (symbolic_alpha) names.emplace_back("a");
  return VarContext(std::move(names));
}

VarContext univariate_context(bool with_parameter) {
  static const VarContext plain({"t"});
  static const VarContext with_a({"t", "a"});
  return with_parameter ? with_a : plain;
}

Polynomial make_pq(unsigned m, const Polynomial& q) {
  const VarContext& qctx = q.context();
  for (const auto& name : qctx.names())
    if (name != "t" && name != "a") throw UnknownVariable(name);
  const VarContext ctx = family_context(m, qctx.contains("a"));
  const Polynomial y = Polynomial::variable(ctx, "y");
  const Polynomial z = Polynomial::variable(ctx, "z");
  std::map<std::string, Polynomial, std::less<>> images{{"t", z * z}};
  if (qctx.contains("a")) images.emplace("a", Polynomial::variable(ctx, "a"));
  const Polynomial u = product_of_x(ctx, m);
  return u * u * y + z * z + u * substitute(q, images);
}

Polynomial family_q(const FamilyParams& params) {
  const VarContext ctx = univariate_context(params.alpha.is_symbolic());
  const Polynomial t = Polynomial::variable(ctx, "t");
  return pow(t - alpha_polynomial(ctx, params.alpha), params.k);
}

Polynomial make_hypersurface(const FamilyParams& params) {
  validate(params);
  const Polynomial pq = make_pq(params.m, family_q(params));
  return pq - alpha_polynomial(pq.context(), params.alpha);
}

Polynomial make_reference(const FamilyParams& params) {
  FamilyParams base = params;
  base.k = 0;
  return make_hypersurface(base);
}

Polynomial quotient_witness(const FamilyParams& params, Side side) {
  validate(params);
  if (params.k < 1) throw std::invalid_argument("quotient witness needs k >= 1");
  auto q = try_quotient(params, side);
  if (!q) throw std::logic_error("quotient by x1...xm is not a polynomial");
  return *q;
}

Morphism make_phi(const FamilyParams& params, const MorphismOptions& options) {
  validate(params);
  const VarContext ctx = family_context(params.m, params.alpha.is_symbolic());
  if (params.k == 0 && !options.corrupt_phi) return Morphism::identity(ctx);
  const unsigned k = params.k;
  const Blocks b = blocks(params);
  // (Q^k - w^k) / u reduces to the polynomial quotient witness.
  Expr quotient = (pow(b.q, k) - pow(b.w, k)) / b.u;
  const unsigned den_exponent = options.corrupt_phi ? (k == 0 ? 1 : k - 1) : k;

  std::vector<Expr> programs;
  programs.push_back(b.x[0] / pow(b.q, den_exponent));
  for (unsigned i = 1; i < params.m; ++i) programs.push_back(b.x[i]);
  programs.push_back(b.y * pow(b.q, 2 * k) + pow(b.q, k) * quotient);
  programs.push_back(b.z);
  if (params.alpha.is_symbolic()) programs.push_back(b.alpha);
  return Morphism(ctx, ctx, std::move(programs));
}

Morphism make_psi(const FamilyParams& params) {
  validate(params);
  const VarContext ctx = family_context(params.m, params.alpha.is_symbolic());
  if (params.k == 0) return Morphism::identity(ctx);
  const unsigned k = params.k;
  const Blocks b = blocks(params);
  Expr quotient = (pow(b.p, k) - pow(b.w, k)) / b.u;

  std::vector<Expr> programs;
  programs.push_back(pow(b.p, k) * b.x[0]);
  for (unsigned i = 1; i < params.m; ++i) programs.push_back(b.x[i]);
  programs.push_back((b.y - quotient) / pow(b.p, 2 * k));
  programs.push_back(b.z);
  if (params.alpha.is_symbolic()) programs.push_back(b.alpha);
  return Morphism(ctx, ctx, std::move(programs));
}

bool ComplementCertificate::verified() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> ComplementCertificate::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.name);
  return out;
}

std::vector<Check> verify_morphism_pair(const FamilyParams& params, const MorphismOptions& options,
                                        std::string_view suffix) {
  validate(params);
  const std::string sfx(suffix);
  const Polynomial p = make_hypersurface(params);
  const Polynomial q = make_reference(params);
  const Morphism phi = make_phi(params, options);
  const Morphism psi = make_psi(params);

  std::vector<Check> checks;
  checks.push_back({"P∘Φ=Q" + sfx, safe_check([&] { return rf_eq(pullback(p, phi), RationalFunction(q)); })});
  checks.push_back({"Q∘Ψ=P" + sfx, safe_check([&] { return rf_eq(pullback(q, psi), RationalFunction(p)); })});
  checks.push_back({"Φ∘Ψ=id" + sfx, safe_check([&] { return is_identity(compose(phi, psi)); })});
  checks.push_back({"Ψ∘Φ=id" + sfx, safe_check([&] { return is_identity(compose(psi, phi)); })});
  if (params.k >= 1) {
    checks.push_back({"(Q^k-(z^2-α)^k)/(x1⋯xm) polynomial" + sfx,
                      safe_check([&] { return try_quotient(params, Side::Q).has_value(); })});
    checks.push_back({"(P^k-(z^2-α)^k)/(x1⋯xm) polynomial" + sfx,
                      safe_check([&] { return try_quotient(params, Side::P).has_value(); })});
  }
  return checks;
}

ComplementCertificate verify_complement_isomorphism(unsigned m, const Alpha& alpha, unsigned k, unsigned kprime,
                                                    const MorphismOptions& options) {
  ComplementCertificate cert{m, alpha, k, kprime, {}};
  const FamilyParams pk{m, k, alpha};
  const FamilyParams pk2{m, kprime, alpha};
  validate(pk);

  cert.checks = verify_morphism_pair(pk, options);
  if (kprime == k) return cert;
  for (auto& c : verify_morphism_pair(pk2, options, " [k′]")) cert.checks.push_back(std::move(c));

  // Theta = Phi_k' o Psi_k maps the complement of H_k onto that of H_k'.
  const Polynomial hk = make_hypersurface(pk);
  const Polynomial hk2 = make_hypersurface(pk2);
  const Morphism phi_k = make_phi(pk, options), psi_k = make_psi(pk);
  const Morphism phi_k2 = make_phi(pk2, options), psi_k2 = make_psi(pk2);
  std::optional<Morphism> theta, theta_inv;
  const bool built = safe_check([&] {
    theta.emplace(compose(phi_k2, psi_k));
    theta_inv.emplace(compose(phi_k, psi_k2));
    return true;
  });
  cert.checks.push_back({"P_k′∘Θ=P_k", built && safe_check([&] {
                           return rf_eq(pullback(hk2, *theta), RationalFunction(hk));
                         })});
  cert.checks.push_back({"P_k∘Θ⁻¹=P_k′", built && safe_check([&] {
                           return rf_eq(pullback(hk, *theta_inv), RationalFunction(hk2));
                         })});
  cert.checks.push_back(
      {"Θ∘Θ⁻¹=id", built && safe_check([&] { return is_identity(compose(*theta, *theta_inv)); })});
  cert.checks.push_back(
      {"Θ⁻¹∘Θ=id", built && safe_check([&] { return is_identity(compose(*theta_inv, *theta)); })});
  return cert;
}

Rational random_small_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

SpotCheckResult spot_check_complement(const FamilyParams& params, std::size_t points, std::uint64_t seed,
                                      const MorphismOptions& options) {
  validate(params);
  const Polynomial p = make_hypersurface(params);
  const Polynomial q = make_reference(params);
  const Morphism phi = make_phi(params, options);
  const Morphism psi = make_psi(params);
  const std::size_t n = p.context().arity();
  std::mt19937_64 rng(seed);

  SpotCheckResult result;
  std::vector<Rational> pt(n);
  while (result.points < points) {
    for (auto& v : pt) v = random_small_rational(rng);
    if (std::any_of(pt.begin(), pt.begin() + params.m, [](const Rational& v) { return v == 0; })) continue;
    const Rational q_value = evaluate(q, pt);
    if (q_value == 0) continue;
    ++result.points;
    try {
      const auto image = hypcomp::apply(phi, pt);
      const bool lands = evaluate(p, image) == q_value;
      const bool returns = hypcomp::apply(psi, image) == pt;
      if (lands && returns) continue;
      ++result.failures;
      if (result.messages.size() < 5) {
        std::string where;
        for (const auto& v : pt) where += (where.empty() ? "" : ",") + hypcomp::to_string(v);
        result.messages.push_back((lands ? "Ψ(Φ(π))≠π at (" : "P(Φ(π))≠Q(π) at (") + where + ")");
      }
    } catch (const PoleError&) {
      ++result.failures;
      if (result.messages.size() < 5) result.messages.push_back("pole hit off V(Q)");
    }
  }
  return result;
}

std::string_view to_string(FiberClass c) {
  switch (c) {
    case FiberClass::V_P0:
      return "V(P0)";
    case FiberClass::V_P0_minus_1:
      return "V(P0-1)";
    case FiberClass::V_P1:
      return "V(P1)";
    case FiberClass::V_P1_minus_1:
      return "V(P1-1)";
  }
  return "?";
}

FiberClass classify_fiber(const Polynomial& q, const Rational& c) {
  const Rational qc = evaluate(q, Point{{"t", c}});
  if (c == 0) return qc == 0 ? FiberClass::V_P0 : FiberClass::V_P1;
  return qc == 0 ? FiberClass::V_P0_minus_1 : FiberClass::V_P1_minus_1;
}

FiberClass classify_hypersurface(const FamilyParams& params) {
  validate(params);
  if (params.alpha.is_symbolic()) throw Unsupported("classification needs a rational alpha");
  return classify_fiber(family_q(params), *params.alpha.value);
}

}  // namespace hypcomp
