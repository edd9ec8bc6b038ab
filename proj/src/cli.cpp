#include "hypcomp/cli.hpp"

#include "hypcomp/errors.hpp"
#include "hypcomp/textio.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace hypcomp {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const std::vector<Alpha>& grid_alphas() {
  static const std::vector<Alpha> alphas{Alpha::symbolic(), Alpha::rational(0), Alpha::rational(1),
                                         Alpha::rational(Rational(-3, 2))};
  return alphas;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string label(unsigned m, const Alpha& alpha, unsigned k) {
  return "m=" + std::to_string(m) + " α=" + alpha.to_string() + " k=" + std::to_string(k);
}

Json finish_claim(std::string id, Json params, const std::vector<Check>& checks, Json extra = Json::object()) {
  Json j;
  j["claim"] = std::move(id);
  j["params"] = std::move(params);
  j["checks"] = check_json(checks);
  for (auto& [key, value] : extra.items()) j[key] = value;
  j["verdict"] = all_pass(checks) ? "pass" : "fail";
  return j;
}

Json lemma_claim(const PaperOptions& opt) {
  std::vector<Check> checks;
  const MorphismOptions mo{opt.corrupt_phi};
  for (unsigned m = 1; m <= opt.max_m; ++m)
    for (const auto& alpha : grid_alphas())
      for (unsigned k = 0; k <= opt.max_k; ++k) {
        for (unsigned kp = 0; kp <= opt.max_k; ++kp) {
          const auto cert = verify_complement_isomorphism(m, alpha, k, kp, mo);
          std::string name = label(m, alpha, k) + " k′=" + std::to_string(kp);
          if (!cert.verified()) {
            std::string failed;
            for (const auto& f : cert.failures()) failed += (failed.empty() ? "" : ", ") + f;
            name += " failed: " + failed;
          }
          checks.push_back({std::move(name), cert.verified()});
        }
        if (opt.points > 0) {
          const auto spot = spot_check_complement({m, k, alpha}, opt.points, opt.seed, mo);
          checks.push_back({label(m, alpha, k) + " numeric oracle", spot.passed()});
        }
      }
  Json params{{"m", "1.." + std::to_string(opt.max_m)},
              {"alpha", {"sym", 0, 1, "-3/2"}},
              {"k", "0.." + std::to_string(opt.max_k)},
              {"kprime", "0.." + std::to_string(opt.max_k)}};
  return finish_claim("lemma-complement", std::move(params), checks);
}

void add_smooth_check(std::vector<Check>& checks, const std::string& name, const FamilyParams& p) {
  const auto r = family_singularity(p);
  const bool ok = r.verdict == SingularityReport::Verdict::Smooth && r.certificate &&
                  verify_certificate(r.polynomial, *r.certificate);
  checks.push_back({name + " smooth (certificate verifies)", ok});
}

void add_complement_check(std::vector<Check>& checks, const std::string& name, unsigned m, const Alpha& a,
                          unsigned k, unsigned kp, const MorphismOptions& mo) {
  checks.push_back({name, verify_complement_isomorphism(m, a, k, kp, mo).verified()});
}

// H1: alpha = 1, k = 1; H2: alpha = 1, k = 0.
Json exple1_claim(const PaperOptions& opt) {
  std::vector<Check> checks;
  const MorphismOptions mo{opt.corrupt_phi};
  const Alpha one = Alpha::rational(1);
  for (unsigned m = 1; m <= opt.max_m; ++m) {
    const std::string tag = " (m=" + std::to_string(m) + ")";
    const auto c1 = classify_hypersurface({m, 1, one});
    const auto c2 = classify_hypersurface({m, 0, one});
    checks.push_back({"H1 ≃ V(P0-1)" + tag, c1 == FiberClass::V_P0_minus_1});
    checks.push_back({"H2 = V(P1-1)" + tag, c2 == FiberClass::V_P1_minus_1});
    checks.push_back({"H1, H2 in different classes" + tag, c1 != c2});
    add_smooth_check(checks, "H1" + tag, {m, 1, one});
    add_smooth_check(checks, "H2" + tag, {m, 0, one});
    add_complement_check(checks, "complements isomorphic" + tag, m, one, 1, 0, mo);
  }
  const VarContext t = univariate_context();
  checks.push_back({"classify_fiber(t-1, 1) = V(P0-1)",
                    classify_fiber(parse("t-1", t), Rational(1)) == FiberClass::V_P0_minus_1});
  checks.push_back({"classify_fiber(1, 1) = V(P1-1)", classify_fiber(parse("1", t), Rational(1)) == FiberClass::V_P1_minus_1});
  Json params{{"m", "1.." + std::to_string(opt.max_m)}, {"alpha", 1}, {"k", 1}, {"kprime", 0}};
  return finish_claim("prop-exple1", std::move(params), checks);
}

// S1 = H_{0,1}, S2 = H_{0,0} in C^3.
Json exple2_claim(const PaperOptions& opt) {
  std::vector<Check> checks;
  const MorphismOptions mo{opt.corrupt_phi};
  const Alpha zero = Alpha::rational(0);
  const auto s1 = family_singularity({1, 1, zero});
  const bool s1_singular = s1.verdict == SingularityReport::Verdict::Singular && s1.witness &&
                           is_singular_point(s1.polynomial, *s1.witness);
  checks.push_back({"S1 singular (origin is a singular point)", s1_singular});
  add_smooth_check(checks, "S2", {1, 0, zero});
  add_complement_check(checks, "complements of S1, S2 isomorphic", 1, zero, 1, 0, mo);
  checks.push_back({"S1 ≃ V(P0)", classify_hypersurface({1, 1, zero}) == FiberClass::V_P0});
  checks.push_back({"S2 = V(P1)", classify_hypersurface({1, 0, zero}) == FiberClass::V_P1});
  Json extra;
  extra["witness"] = Json::array({0, 0, 0});
  extra["notes"] = "the identities do not involve extra cylinder coordinates, so they hold on S x C^m' unchanged";
  Json params{{"m", 1}, {"alpha", 0}, {"k", 1}, {"kprime", 0}};
  return finish_claim("prop-exple2", std::move(params), checks, std::move(extra));
}

// H''1 = H_{1,1}, H''2 = H_{1,2}.
Json exple3_claim(const PaperOptions& opt) {
  std::vector<Check> checks;
  const MorphismOptions mo{opt.corrupt_phi};
  const Alpha one = Alpha::rational(1);
  for (unsigned m = 1; m <= opt.max_m; ++m) {
    const std::string tag = " (m=" + std::to_string(m) + ")";
    add_smooth_check(checks, "H''1" + tag, {m, 1, one});
    add_smooth_check(checks, "H''2" + tag, {m, 2, one});
    checks.push_back({"H''1 ≃ H''2 (same class)" + tag,
                      classify_hypersurface({m, 1, one}) == classify_hypersurface({m, 2, one})});
    add_complement_check(checks, "complements isomorphic" + tag, m, one, 1, 2, mo);
  }
  const VarContext t = univariate_context();
  const auto verdict = decide_equivalence(parse("t-1", t), Rational(1), parse("(t-1)^2", t), Rational(1));
  checks.push_back({"not equivalent: (t-1, 1) vs ((t-1)^2, 1)", !verdict.equivalent});
  Json extra;
  extra["reason"] = verdict.reason;
  Json params{{"m", "1.." + std::to_string(opt.max_m)}, {"alpha", 1}, {"k", 1}, {"kprime", 2}};
  return finish_claim("prop-exple3", std::move(params), checks, std::move(extra));
}

void print_text(std::ostream& out, const Json& report) {
  out << report["claim"].get<std::string>() << ": " << report["verdict"].get<std::string>() << '\n';
  if (report.contains("checks"))
    for (const auto& c : report["checks"])
      out << "  " << (c["status"] == "pass" ? "PASS " : "FAIL ") << c["name"].get<std::string>() << '\n';
  for (const char* key : {"polynomial", "reason", "caveat", "notes"})
    if (report.contains(key)) out << "  " << key << ": " << (report[key].is_string() ? report[key].get<std::string>() : report[key].dump()) << '\n';
  if (report.contains("witness")) out << "  witness: " << report["witness"].dump() << '\n';
  if (report.contains("certificate")) {
    const auto& cert = report["certificate"];
    for (const auto& [gen, mult] : cert["multipliers"].items())
      if (mult != "0") out << "  g[" << gen << "] = " << mult.get<std::string>() << '\n';
    out << "  tau = " << cert["tau"].get<std::string>() << '\n';
  }
}

int emit(std::ostream& out, const std::string& format, const Json& report, bool ok) {
  if (format == "json")
    out << dump(report) << '\n';
  else
    print_text(out, report);
  return ok ? 0 : kExitFail;
}

bool report_passes(const Json& report) {
  if (report.contains("checks"))
    for (const auto& c : report["checks"])
      if (c["status"] != "pass") return false;
  return report["verdict"] != "fail";
}

std::uint64_t effective_seed(std::uint64_t flag) {
  if (const char* env = std::getenv("COMPLEMENT_CERT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("COMPLEMENT_CERT_SEED", "not an unsigned integer");
    }
  }
  return flag;
}

}  // namespace

Json verify_paper(const PaperOptions& options) {
  std::vector<Json> claims{lemma_claim(options), exple1_claim(options), exple2_claim(options), exple3_claim(options)};
  std::sort(claims.begin(), claims.end(),
            [](const Json& a, const Json& b) { return a["claim"].get<std::string>() < b["claim"].get<std::string>(); });
  bool ok = true;
  Json failed = Json::array();
  for (const auto& c : claims)
    if (c["verdict"] != "pass") {
      ok = false;
      failed.push_back(c["claim"]);
    }
  Json doc;
  doc["claims"] = claims;
  if (!ok) doc["failed"] = failed;
  doc["verdict"] = ok ? "pass" : "fail";
  return doc;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certificates for the hypersurfaces x1^2...xm^2 y + z^2 + x1...xm (z^2-a)^k = a"};
  app.require_subcommand(1);

  std::string output = "text";
  std::uint64_t seed = 1;
  unsigned m = 1, k = 0, kprime = 0, max_m = 3, max_k = 3;
  std::size_t points = 100, paper_points = 20;
  std::string alpha_text = "sym", q = "", c = "0", q1, c1, q2, c2;
  bool corrupt = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_family = [&](CLI::App* sub, bool with_kprime) {
    sub->add_option("--m", m, "number of x variables (>= 1)")->required();
    sub->add_option("--alpha", alpha_text, "rational p/q or sym")->required();
    sub->add_option("--k", k, "exponent k >= 0")->required();
    if (with_kprime) sub->add_option("--kprime", kprime, "second exponent k' >= 0");
  };

  auto* vc = app.add_subcommand("verify-complement", "certify the complement isomorphism H_{a,k} ~ H_{a,k'}");
  add_family(vc, true);
  vc->add_option("--points", points, "random points for the numeric oracle");
  vc->add_option("--seed", seed, "seed for the numeric oracle");
  vc->add_flag("--corrupt-phi", corrupt)->group("");
  add_common(vc);

  auto* cl = app.add_subcommand("classify", "class of V(P_q - c) among V(P0), V(P0-1), V(P1), V(P1-1)");
  cl->add_option("--q", q, "polynomial in t")->required();
  cl->add_option("--c", c, "rational constant")->required();
  add_common(cl);

  auto* eq = app.add_subcommand("equivalence", "decide c2 = c1/mu and q2(t) = lambda q1(mu t)");
  eq->add_option("--q1", q1)->required();
  eq->add_option("--c1", c1)->required();
  eq->add_option("--q2", q2)->required();
  eq->add_option("--c2", c2)->required();
  add_common(eq);

  auto* sg = app.add_subcommand("singularity", "singular witness or smoothness certificate for H_{a,k}");
  add_family(sg, false);
  add_common(sg);

  auto* vp = app.add_subcommand("verify-paper", "run every claim and emit one consolidated report");
  vp->add_option("--points", paper_points, "numeric oracle points per configuration");
  vp->add_option("--seed", seed, "seed for the numeric oracle");
  vp->add_option("--max-m", max_m, "largest m in the grid")->check(CLI::Range(1u, 10u));
  vp->add_option("--max-k", max_k, "largest k in the grid")->check(CLI::Range(0u, 10u));
  vp->add_flag("--corrupt-phi", corrupt)->group("");
  add_common(vp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (vc->parsed() || sg->parsed()) {
      if (m < 1) throw CLI::ValidationError("--m", "m must be at least 1");
    }
    if (vc->parsed()) {
      const Alpha alpha = Alpha::parse(alpha_text);
      const MorphismOptions mo{corrupt};
      const auto cert = verify_complement_isomorphism(m, alpha, k, kprime, mo);
      std::optional<SpotCheckResult> spot;
      if (points > 0) spot = spot_check_complement({m, k, alpha}, points, effective_seed(seed), mo);
      const Json report = emit_report(cert, spot);
      return emit(out, output, report, report_passes(report));
    }
    if (cl->parsed()) {
      const Polynomial qp = parse(q, univariate_context());
      const Rational cv = parse_rational(c);
      const Json report = emit_classification(classify_fiber(qp, cv), qp, cv);
      return emit(out, output, report, true);
    }
    if (eq->parsed()) {
      const VarContext t = univariate_context();
      const Polynomial p1 = parse(q1, t), p2 = parse(q2, t);
      const Rational r1 = parse_rational(c1), r2 = parse_rational(c2);
      const auto verdict = decide_equivalence(p1, r1, p2, r2);
      const Json report = emit_report(verdict, p1, r1, p2, r2);
      return emit(out, output, report, report_passes(report));
    }
    if (sg->parsed()) {
      const FamilyParams params{m, k, Alpha::parse(alpha_text)};
      const Json report = emit_report(family_singularity(params), params);
      return emit(out, output, report, report_passes(report));
    }
    if (vp->parsed()) {
      PaperOptions opt{max_m, max_k, paper_points, effective_seed(seed), corrupt};
      const Json doc = verify_paper(opt);
      const bool ok = doc["verdict"] == "pass";
      if (output == "json") {
        out << dump(doc) << '\n';
      } else {
        for (const auto& claim : doc["claims"]) print_text(out, claim);
        out << "verify-paper: " << doc["verdict"].get<std::string>() << '\n';
      }
      if (!ok) err << "failed claims: " << doc["failed"].dump() << '\n';
      return ok ? 0 : kExitFail;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownVariable& e) {
    err << "error: " << e.what();
    if (e.position() != UnknownVariable::npos) err << " at offset " << e.position();
    err << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const AlgebraError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace hypcomp
