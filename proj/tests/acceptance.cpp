#define DOCTEST_CONFIG_IMPLEMENT
#include "support.hpp"

#include "hypcomp/smoothness.hpp"

#include <doctest.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

using namespace hypcomp;
using namespace testing;

namespace {

const std::vector<Alpha>& grid_alphas() {
  static const std::vector<Alpha> alphas{Alpha::symbolic(), Alpha::rational(0), Alpha::rational(1),
                                         Alpha::rational(Rational(-3, 2))};
  return alphas;
}

bool has_failed(const ComplementCertificate& cert, std::string_view name) {
  for (const auto& c : cert.checks)
    if (c.name == name) return !c.passed;
  return false;
}

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome lemma_grid() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t certs = 0, failed = 0;
  for (unsigned m = 1; m <= 3; ++m)
    for (const auto& alpha : grid_alphas())
      for (unsigned k = 0; k <= 3; ++k)
        for (unsigned kp = 0; kp <= 3; ++kp) {
          ++certs;
          if (!verify_complement_isomorphism(m, alpha, k, kp).verified()) ++failed;
        }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << certs << " certificates, " << failed << " failed, " << secs << " s";
  return {failed == 0 && secs < 60.0, d.str()};
}

Outcome quotient_grid() {
  std::size_t checked = 0, failed = 0;
  for (unsigned m = 1; m <= 3; ++m)
    for (const auto& alpha : grid_alphas())
      for (unsigned k = 1; k <= 3; ++k)
        for (Side side : {Side::P, Side::Q}) {
          ++checked;
          try {
            quotient_witness({m, k, alpha}, side);
          } catch (const std::exception&) {
            ++failed;
          }
        }
  return {failed == 0, std::to_string(checked) + " quotients, " + std::to_string(failed) + " not polynomial"};
}

Outcome classification() {
  const auto expected = [](int alpha, unsigned k) {
    if (alpha == 0) return k >= 1 ? FiberClass::V_P0 : FiberClass::V_P1;
    return k >= 1 ? FiberClass::V_P0_minus_1 : FiberClass::V_P1_minus_1;
  };
  bool ok = true;
  for (int alpha : {0, 1})
    for (unsigned k = 0; k <= 2; ++k) ok = ok && classify_hypersurface({1, k, Alpha::rational(alpha)}) == expected(alpha, k);
  const VarContext t = univariate_context();
  const auto h1 = classify_fiber(parse("t-1", t), Rational(1));
  const auto h2 = classify_fiber(parse("1", t), Rational(1));
  ok = ok && h1 == FiberClass::V_P0_minus_1 && h2 == FiberClass::V_P1_minus_1 && h1 != h2;
  return {ok, "table on alpha in {0,1}, k in {0,1,2}; H1 " + std::string(to_string(h1)) + ", H2 " + std::string(to_string(h2))};
}

Outcome equivalence() {
  const VarContext t = univariate_context();
  const auto v = decide_equivalence(parse("t-1", t), Rational(1), parse("(t-1)^2", t), Rational(1));
  std::mt19937_64 rng(2024);
  const auto nonzero = [&] {
    Rational r;
    while (r == 0) r = random_small_rational(rng);
    return r;
  };
  int sound = 0;
  for (int i = 0; i < 200; ++i) {
    Polynomial q(t);
    while (q.is_zero()) q = random_polynomial(rng, t, 5, 6);
    const Rational c = i % 5 == 0 ? Rational(0) : nonzero(), lambda = nonzero(), mu = nonzero();
    const Polynomial mt = Polynomial::variable(t, 0).scaled(mu);
    const Polynomial q2 = substitute(q, std::span<const Polynomial>(&mt, 1)).scaled(lambda);
    const auto w = decide_equivalence(q, c, q2, c / mu);
    if (w.equivalent && verify_equivalence_witness(q, c, q2, c / mu, w)) ++sound;
  }
  return {!v.equivalent && sound == 200,
          std::string("(t-1,1) vs ((t-1)^2,1): ") + (v.equivalent ? "equivalent" : "not equivalent") + "; " +
              std::to_string(sound) + "/200 constructed pairs verified"};
}

bool smooth_with_certificate(const FamilyParams& p) {
  const auto r = family_singularity(p);
  return r.verdict == SingularityReport::Verdict::Smooth && r.certificate &&
         verify_certificate(r.polynomial, *r.certificate);
}

Outcome singularity() {
  const Alpha zero = Alpha::rational(0), one = Alpha::rational(1);
  const auto s1 = family_singularity({1, 1, zero});
  const Point origin{{"x1", 0}, {"y", 0}, {"z", 0}};
  bool ok = s1.verdict == SingularityReport::Verdict::Singular && s1.witness && *s1.witness == origin &&
            is_singular_point(s1.polynomial, origin);
  // S2, H1, H2, H''1, H''2
  for (const FamilyParams& p : {FamilyParams{1, 0, zero}, FamilyParams{1, 1, one}, FamilyParams{1, 0, one},
                                FamilyParams{1, 2, one}})
    ok = ok && smooth_with_certificate(p);
  int grid = 0, agree = 0;
  for (const Rational& alpha : {Rational(0), Rational(1), Rational(-3, 2), Rational(1, 3)})
    for (unsigned m = 1; m <= 3; ++m)
      for (unsigned k = 0; k <= 2; ++k) {
        ++grid;
        const auto r = family_singularity({m, k, Alpha::rational(alpha)});
        const bool singular = alpha == 0 && (k >= 1 || m >= 2);
        const bool verified = singular ? (r.witness && is_singular_point(r.polynomial, *r.witness))
                                       : (r.certificate && verify_certificate(r.polynomial, *r.certificate));
        if ((r.verdict == SingularityReport::Verdict::Singular) == singular && verified) ++agree;
      }
  return {ok && agree == grid, "S1 singular at origin; S2, H1, H2, H''1, H''2 certified smooth; grid " +
                                   std::to_string(agree) + "/" + std::to_string(grid)};
}

Outcome numeric_oracle() {
  std::size_t configs = 0, points = 0, failures = 0;
  for (unsigned m = 1; m <= 3; ++m)
    for (const auto& alpha : grid_alphas())
      for (unsigned k = 0; k <= 3; ++k) {
        const auto r = spot_check_complement({m, k, alpha}, 1000, 7 + configs);
        ++configs;
        points += r.points;
        failures += r.failures;
      }
  return {failures == 0 && points == configs * 1000,
          std::to_string(configs) + " configurations, " + std::to_string(points) + " points, " +
              std::to_string(failures) + " failures"};
}

Outcome property_suites() {
  doctest::Context ctx;
  std::ostringstream sink;
  ctx.setCout(&sink);
  ctx.setOption("test-case",
                "ring axioms on random inputs,exact division undoes multiplication,Leibniz rule,"
                "pullback is a ring homomorphism,print then parse round-trips");
  ctx.setOption("no-version", true);
  const int rc = ctx.run();
  const bool all_ran = std::regex_search(sink.str(), std::regex(R"(test cases:\s+5 \|\s+5 passed)"));
  std::string summary = "ring axioms, exact_div, Leibniz, pullback, parse/print at 500 cases each";
  if (rc != 0 || !all_ran) summary += "\n" + sink.str();
  return {rc == 0 && all_ran, summary};
}

Outcome negative_control() {
  std::size_t caught = 0, total = 0;
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned k = 0; k <= 3; ++k) {
      ++total;
      const auto cert = verify_complement_isomorphism(m, Alpha::symbolic(), k, k, {true});
      if (!cert.verified() && has_failed(cert, "P∘Φ=Q")) ++caught;
    }
  return {caught == total, "perturbed Phi rejected by P∘Φ=Q in " + std::to_string(caught) + "/" + std::to_string(total)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"complement isomorphism grid", lemma_grid},
      {"quotients are polynomials", quotient_grid},
      {"classification", classification},
      {"equivalence", equivalence},
      {"singularity", singularity},
      {"numeric oracle", numeric_oracle},
      {"property suites", property_suites},
      {"negative control", negative_control},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
