#include "hypcomp/report.hpp"

#include "hypcomp/textio.hpp"

namespace hypcomp {

namespace {

Json family_params(unsigned m, const Alpha& alpha, unsigned k, std::optional<unsigned> kprime) {
  Json p;
  p["m"] = m;
  if (alpha.is_symbolic())
    p["alpha"] = "sym";
  else
    p["alpha"] = rational_json(*alpha.value);
  p["k"] = k;
  if (kprime) p["kprime"] = *kprime;
  return p;
}

}  // namespace

Json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

Json check_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}});
  return arr;
}

Json emit_report(const ComplementCertificate& cert, const std::optional<SpotCheckResult>& spot) {
  std::vector<Check> checks = cert.checks;
  if (spot)
    checks.push_back({"numeric oracle at " + std::to_string(spot->points) + " points", spot->passed()});
  Json j;
  j["claim"] = "lemma-complement";
  j["params"] = family_params(cert.m, cert.alpha, cert.k, cert.kprime);
  j["checks"] = check_json(checks);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  if (spot && !spot->messages.empty()) j["notes"] = spot->messages;
  j["verdict"] = ok ? "pass" : "fail";
  return j;
}

Json emit_report(const SingularityReport& report, const FamilyParams& params) {
  const auto& ctx = report.polynomial.context();
  Json j;
  j["claim"] = "singularity";
  j["params"] = family_params(params.m, params.alpha, params.k, std::nullopt);
  j["polynomial"] = print_poly(report.polynomial);

  std::vector<Check> checks;
  if (report.witness) {
    Json w = Json::array();
    for (const auto& name : ctx.names()) w.push_back(rational_json(report.witness->at(name)));
    checks.push_back({"witness is a singular point", is_singular_point(report.polynomial, *report.witness)});
    j["checks"] = check_json(checks);
    j["witness"] = std::move(w);
  }
  if (report.certificate) {
    checks.push_back({"certificate identity", verify_certificate(report.polynomial, *report.certificate)});
    j["checks"] = check_json(checks);
    Json mult;
    std::vector<std::string> labels{"F"};
    for (const auto& name : ctx.names())
      if (name != "a") labels.push_back("F_" + name);
    for (std::size_t i = 0; i < labels.size() && i < report.certificate->multipliers.size(); ++i)
      mult[labels[i]] = print_poly(report.certificate->multipliers[i]);
    j["certificate"] = {{"multipliers", std::move(mult)}, {"tau", print_poly(report.certificate->tau)}};
  }
  if (!report.caveat.empty()) j["caveat"] = report.caveat;
  j["verdict"] = std::string(to_string(report.verdict));
  return j;
}

Json emit_report(const EquivalenceVerdict& verdict, const Polynomial& q1, const Rational& c1, const Polynomial& q2,
                 const Rational& c2) {
  Json j;
  j["claim"] = "equivalence";
  j["params"] = {{"q1", print_poly(q1)}, {"c1", rational_json(c1)}, {"q2", print_poly(q2)}, {"c2", rational_json(c2)}};
  if (verdict.equivalent) {
    j["checks"] = check_json({{"witness verifies", verify_equivalence_witness(q1, c1, q2, c2, verdict)}});
    Json w;
    if (const auto* mu = std::get_if<Rational>(&verdict.mu)) {
      w["mu"] = rational_json(*mu);
    } else {
      const auto& rad = std::get<Radical>(verdict.mu);
      w["mu"] = {{"root_degree", rad.g}, {"radicand", rational_json(rad.s)}};
    }
    w["lambda"] = {{"coefficient", rational_json(verdict.lambda.coefficient)},
                   {"mu_power", verdict.lambda.mu_power}};
    j["witness"] = std::move(w);
    j["verdict"] = "equivalent";
  } else {
    j["checks"] = Json::array();
    j["reason"] = verdict.reason;
    j["verdict"] = "not-equivalent";
  }
  return j;
}

Json emit_classification(FiberClass cls, const Polynomial& q, const Rational& c) {
  Json j;
  j["claim"] = "classify";
  j["params"] = {{"q", print_poly(q)}, {"c", rational_json(c)}};
  j["checks"] = Json::array();
  j["verdict"] = std::string(to_string(cls));
  return j;
}

std::string dump(const Json& j) { return j.dump(2); }

}  // namespace hypcomp
