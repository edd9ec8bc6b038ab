#include "support.hpp"

#include "hypcomp/errors.hpp"
#include "hypcomp/report.hpp"

#include <doctest.h>

using namespace hypcomp;
using namespace testing;

namespace {

const VarContext& c3() {
  static const VarContext ctx = family_context(1, false);
  return ctx;
}

std::size_t error_offset(std::string_view text, const VarContext& ctx) {
  try {
    parse(text, ctx);
  } catch (const ParseError& e) {
    return e.position();
  } catch (const UnknownVariable& e) {
    return e.position();
  }
  return std::string_view::npos;
}

Json find_check(const Json& checks, std::string_view name) {
  for (const auto& c : checks)
    if (c["name"] == name) return c;
  return Json();
}

}  // namespace

TEST_SUITE("textio") {
  TEST_CASE("parse examples") {
    const Polynomial x1 = Polynomial::variable(c3(), "x1"), y = Polynomial::variable(c3(), "y"),
                     z = Polynomial::variable(c3(), "z");
    CHECK(parse("x1^2*y + z^2 + x1*z^2", c3()) == x1 * x1 * y + z * z + x1 * z * z);
    CHECK(parse("3/2", c3()) == Polynomial(c3(), Rational(3, 2)));
    CHECK(parse("-3/6*x1", c3()) == x1.scaled(Rational(-1, 2)));
    CHECK(parse("((x1))", c3()) == x1);
    const VarContext c2 = family_context(2, false);
    CHECK(parse("x1^2*x2^2*y + z^2 + x1*x2*(z^2 - 1)^2 - 1", c2) ==
          make_hypersurface({2, 2, Alpha::rational(1)}));
    CHECK(parse("  x1 -   z  ", c3()) == x1 - z);
  }

  TEST_CASE("unary minus binds looser than powers") {
    const Polynomial x1 = Polynomial::variable(c3(), "x1");
    CHECK(parse("-x1^2", c3()) == -(x1 * x1));
    CHECK(parse("(-x1)^2", c3()) == x1 * x1);
    CHECK(parse("--x1", c3()) == x1);
    CHECK(parse("y*-x1", c3()) == -(Polynomial::variable(c3(), "y") * x1));
  }

  TEST_CASE("errors carry offsets") {
    CHECK(error_offset("x1 + ", c3()) == 5);
    CHECK(error_offset("x1 + w", c3()) == 5);
    CHECK(error_offset("x1 + x2", c3()) == 5);
    CHECK(error_offset("2x1", c3()) == 1);
    CHECK(error_offset("1.5", c3()) == 1);
    CHECK(error_offset("(x1", c3()) == 3);
    CHECK(error_offset("x1^", c3()) == 3);
    CHECK(error_offset("1/0", c3()) == 2);
    CHECK(error_offset("x1^99999", c3()) == 3);
    CHECK(error_offset("x1 y", c3()) == 3);
    CHECK_THROWS_AS(parse("", c3()), ParseError);
    try {
      parse("x1 + ?", c3());
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
      CHECK_FALSE(e.expected().empty());
    }
  }

  TEST_CASE("print examples") {
    CHECK(print_poly(parse("x1^2*y + z^2", c3())) == "x1^2*y + z^2");
    CHECK(print_poly(parse("z^2 + y*x1^2", c3())) == "x1^2*y + z^2");
    CHECK(print_poly(parse("-x1", c3())) == "-x1");
    CHECK(print_poly(parse("3/2*x1 - 1", c3())) == "3/2*x1 - 1");
    CHECK(print_poly(Polynomial(c3())) == "0");
    CHECK(print_poly(parse("-2/3", c3())) == "-2/3");
    const Polynomial x1 = Polynomial::variable(c3(), "x1"), y = Polynomial::variable(c3(), "y");
    CHECK(print_rational_function(RationalFunction(x1)) == "x1");
    const std::string rf = print_rational_function(RationalFunction(x1, x1 * y + Polynomial(c3(), Rational(1))));
    CHECK(rf.find(" / ") != std::string::npos);
  }

  TEST_CASE("print then parse round-trips") {
    std::mt19937_64 rng(51);
    const VarContext ctx = family_context(3, true);
    for (int i = 0; i < 500; ++i) {
      const Polynomial p = random_polynomial(rng, ctx, 6, 4);
      const std::string text = print_poly(p);
      const Polynomial back = parse(text, ctx);
      REQUIRE(back == p);
      REQUIRE(print_poly(back) == text);
    }
  }

  TEST_CASE("rational function text round-trips") {
    std::mt19937_64 rng(52);
    const VarContext ctx({"x1", "y", "z"});
    for (int i = 0; i < 500; ++i) {
      const Polynomial n = random_polynomial(rng, ctx, 3, 2);
      Polynomial d(ctx);
      while (d.is_zero()) d = random_polynomial(rng, ctx, 3, 2);
      const RationalFunction r(n, d);
      const std::string text = print_rational_function(r);
      const auto slash = text.find(" / ");
      if (slash == std::string::npos) {
        REQUIRE(rf_eq(RationalFunction(parse(text, ctx)), r));
      } else {
        const Polynomial pn = parse(text.substr(0, slash), ctx);
        const Polynomial pd = parse(text.substr(slash + 3), ctx);
        REQUIRE(rf_eq(RationalFunction(pn, pd), r));
      }
    }
  }

  TEST_CASE("complement report") {
    const auto cert = verify_complement_isomorphism(1, Alpha::symbolic(), 1, 0);
    const Json j = emit_report(cert);
    CHECK(j["claim"] == "lemma-complement");
    CHECK(j["params"]["m"] == 1);
    CHECK(j["params"]["alpha"] == "sym");
    for (const char* name : {"P∘Φ=Q", "Q∘Ψ=P", "Φ∘Ψ=id", "Ψ∘Φ=id"})
      CHECK(find_check(j["checks"], name)["status"] == "pass");
    CHECK(j["verdict"] == "pass");
    CHECK(dump(j) == dump(emit_report(verify_complement_isomorphism(1, Alpha::symbolic(), 1, 0))));
    CHECK(Json::parse(dump(j)) == j);
  }

  TEST_CASE("singularity report") {
    const FamilyParams params{1, 1, Alpha::rational(0)};
    const Json j = emit_report(family_singularity(params), params);
    CHECK(j["claim"] == "singularity");
    CHECK(j["verdict"] == "singular");
    CHECK(j["witness"] == Json::array({0, 0, 0}));
    CHECK(j["polynomial"] == "x1^2*y + x1*z^2 + z^2");
    const FamilyParams smooth{1, 0, Alpha::rational(0)};
    const Json s = emit_report(family_singularity(smooth), smooth);
    CHECK(s["verdict"] == "smooth");
    CHECK(s["certificate"]["multipliers"].contains("F_x1"));
  }

  TEST_CASE("equivalence report") {
    const VarContext t = univariate_context();
    const Polynomial q1 = parse("t-1", t), q2 = parse("(t-1)^2", t);
    const auto v = decide_equivalence(q1, Rational(1), q2, Rational(1));
    const Json j = emit_report(v, q1, Rational(1), q2, Rational(1));
    CHECK(j["claim"] == "equivalence");
    CHECK(j["verdict"] == "not-equivalent");
    CHECK(j["reason"].is_string());
    const Json e = emit_report(decide_equivalence(q1, Rational(2), q1, Rational(2)), q1, Rational(2), q1, Rational(2));
    CHECK(e["verdict"] == "equivalent");
    CHECK(e["witness"]["mu"] == 1);
  }

  TEST_CASE("rational encoding") {
    CHECK(rational_json(Rational(-7)) == -7);
    CHECK(rational_json(Rational(3, 4)) == "3/4");
    CHECK(rational_json(Rational("123456789012345678901234567890")) == "123456789012345678901234567890");
  }
}
