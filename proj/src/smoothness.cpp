#include "hypcomp/smoothness.hpp"

#include "hypcomp/errors.hpp"

namespace hypcomp {

namespace {

std::vector<std::size_t> coordinate_indices(const VarContext& ctx) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ctx.arity(); ++i)
    if (ctx.name(i) != "a") out.push_back(i);
  return out;
}

// alpha = -F + x1 F_x1 - y F_y + z F_z / 2.
SmoothnessCertificate certificate_k0(const FamilyParams& params, const VarContext& ctx, const Polynomial& alpha) {
  const unsigned m = params.m;
  std::vector<Polynomial> g(m + 3, Polynomial(ctx));
  g[0] = Polynomial(ctx, Rational(-1));
  g[1] = Polynomial::variable(ctx, "x1");
  g[m + 1] = -Polynomial::variable(ctx, "y");
  g[m + 2] = Polynomial::variable(ctx, "z").scaled(Rational(1, 2));
  return {std::move(g), alpha};
}

// 1 = F_x1 (1 - 2 x1 y) + 4 y^2 F_y, for m = 1, k = 0, alpha = 0.
SmoothnessCertificate certificate_exceptional(const VarContext& ctx) {
  const Polynomial x1 = Polynomial::variable(ctx, "x1");
  const Polynomial y = Polynomial::variable(ctx, "y");
  const Polynomial one(ctx, Rational(1));
  std::vector<Polynomial> g(4, Polynomial(ctx));
  g[1] = one - (x1 * y).scaled(Rational(2));
  g[2] = (y * y).scaled(Rational(4));
  return {std::move(g), one};
}

// With w = z^2 - alpha and U = k x1...xm w^(k-1):
//   w = F - x1 F_x1 + y F_y,  z F_z / 2 = (w + alpha)(1 + U),
//   alpha = (1 - U) z F_z / 2 - (1 - U^2) w + alpha k^2 w^(2k-2) F_y.
SmoothnessCertificate certificate_k(const FamilyParams& params, const VarContext& ctx, const Polynomial& alpha) {
  const unsigned m = params.m, k = params.k;
  const Polynomial one(ctx, Rational(1));
  const Polynomial z = Polynomial::variable(ctx, "z");
  const Polynomial y = Polynomial::variable(ctx, "y");
  const Polynomial w = z * z - alpha;
  Polynomial u = one;
  for (unsigned i = 1; i <= m; ++i) u = u * Polynomial::variable(ctx, "x" + std::to_string(i));
  const Polynomial big_u = (u * pow(w, k - 1)).scaled(Rational(k));
  const Polynomial e = one - big_u * big_u;

  std::vector<Polynomial> g(m + 3, Polynomial(ctx));
  g[0] = -e;
  g[1] = e * Polynomial::variable(ctx, "x1");
  g[m + 1] = -(e * y) + (alpha * pow(w, 2 * k - 2)).scaled(Rational(k * k));
  g[m + 2] = (z * (one - big_u)).scaled(Rational(1, 2));
  return {std::move(g), alpha};
}

}  // namespace

std::string_view to_string(SingularityReport::Verdict v) {
  return v == SingularityReport::Verdict::Singular ? "singular" : "smooth";
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
  std::vector<Polynomial> out{f};
  for (std::size_t i : coordinate_indices(f.context())) out.push_back(partial_derivative(f, i));
  return out;
}

bool is_singular_point(const Polynomial& f, const Point& point) {
  for (const auto& gen : jacobian_generators(f))
    if (evaluate(gen, point) != 0) return false;
  return true;
}

bool verify_certificate(const Polynomial& f, const SmoothnessCertificate& certificate) {
  const auto gens = jacobian_generators(f);
  if (certificate.multipliers.size() != gens.size()) return false;
  const auto& ctx = f.context();
  require_same_context(ctx, certificate.tau.context(), "certificate");
  if (certificate.tau.is_zero()) return false;
  if (!certificate.tau.is_constant() && !(ctx.contains("a") && certificate.tau == Polynomial::variable(ctx, "a")))
    return false;
  std::vector<Polynomial> parts;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    require_same_context(ctx, certificate.multipliers[i].context(), "certificate");
    parts.push_back(certificate.multipliers[i] * gens[i]);
  }
  return sum(ctx, parts) == certificate.tau;
}

SingularityReport family_singularity(const FamilyParams& params) {
  validate(params);
  SingularityReport report;
  report.polynomial = make_hypersurface(params);
  const auto& ctx = report.polynomial.context();
  const bool symbolic = params.alpha.is_symbolic();
  const bool alpha_zero = !symbolic && *params.alpha.value == 0;

  if (alpha_zero && (params.k >= 1 || params.m >= 2)) {
    report.verdict = SingularityReport::Verdict::Singular;
    Point origin;
    for (const auto& name : ctx.names()) origin.emplace(name, Rational(0));
    report.witness = std::move(origin);
    return report;
  }

  report.verdict = SingularityReport::Verdict::Smooth;
  if (alpha_zero) {
    report.certificate = certificate_exceptional(ctx);
    return report;
  }
  const Polynomial alpha = symbolic ? Polynomial::variable(ctx, "a") : Polynomial(ctx, *params.alpha.value);
  report.certificate = params.k == 0 ? certificate_k0(params, ctx, alpha) : certificate_k(params, ctx, alpha);
  if (symbolic) report.caveat = "certificate with tau = a proves smoothness for alpha != 0 only";
  return report;
}

}  // namespace hypcomp
