#include "support.hpp"

#include "hypcomp/errors.hpp"
#include "hypcomp/morphism.hpp"

#include <doctest.h>

#include <optional>

using namespace hypcomp;
using namespace testing;

namespace {

struct Setup {
  FamilyParams params{1, 1, Alpha::symbolic()};
  Polynomial p = make_hypersurface(params);
  Polynomial q = make_reference(params);
  const VarContext& ctx = p.context();
  Polynomial x1 = Polynomial::variable(ctx, "x1");
  RationalFunction rf(const Polynomial& n) const { return RationalFunction(n); }
  RationalFunction rf(const Polynomial& n, const Polynomial& d) const { return RationalFunction(n, d); }
};

RationalFunction random_rf(std::mt19937_64& rng, const VarContext& ctx) {
  Polynomial den(ctx);
  while (den.is_zero()) den = random_polynomial(rng, ctx, 3, 2);
  return RationalFunction(random_polynomial(rng, ctx, 3, 2), den);
}

Morphism random_morphism(std::mt19937_64& rng, const VarContext& dom, const VarContext& cod) {
  std::vector<RationalFunction> entries;
  for (std::size_t i = 0; i < cod.arity(); ++i) entries.push_back(random_rf(rng, dom));
  return Morphism(dom, cod, std::move(entries));
}

}  // namespace

TEST_SUITE("ratfunc") {
  TEST_CASE("field operations") {
    Setup s;
    CHECK((s.rf(s.x1, s.q) + s.rf(-s.x1, s.q)).is_zero());
    CHECK(rf_eq(s.rf(s.x1, s.q) * s.rf(s.q), s.rf(s.x1)));
    CHECK(rf_eq(inverse(s.rf(s.p)), s.rf(Polynomial(s.ctx, Rational(1)), s.p)));
    CHECK_THROWS_AS(inverse(s.rf(Polynomial(s.ctx))), NotInvertible);
    CHECK_THROWS_AS(s.rf(s.x1, Polynomial(s.ctx)), DivisionByZero);
  }

  TEST_CASE("equality by cross-multiplication") {
    Setup s;
    const Polynomial one(s.ctx, Rational(1));
    CHECK(rf_eq(s.rf(s.x1), s.rf(s.x1 * s.q, s.q)));
    CHECK_FALSE(rf_eq(s.rf(one, s.q), s.rf(one, s.p)));
    CHECK(rf_eq(s.rf(Polynomial(s.ctx), s.q), s.rf(Polynomial(s.ctx), s.p)));
  }

  TEST_CASE("P minus Q is nonzero for k >= 1") {
    for (unsigned k = 1; k <= 3; ++k) {
      const FamilyParams params{2, k, Alpha::symbolic()};
      CHECK_FALSE(make_hypersurface(params) == make_reference(params));
    }
  }

  TEST_CASE("pullback along Phi") {
    Setup s;
    const Morphism phi = make_phi(s.params);
    const Polynomial z = Polynomial::variable(s.ctx, "z");
    CHECK(rf_eq(pullback(z, phi), s.rf(z)));
    CHECK(rf_eq(pullback(s.p, phi), s.rf(s.q)));
    const Polynomial c(s.ctx, Rational(7, 3));
    CHECK(rf_eq(pullback(c, phi), s.rf(c)));
    CHECK_THROWS_AS(pullback(Polynomial::variable(univariate_context(), "t"), phi), ContextMismatch);
  }

  TEST_CASE("composition") {
    Setup s;
    const Morphism phi = make_phi(s.params), psi = make_psi(s.params);
    CHECK(equal_coordinates(compose(Morphism::identity(s.ctx), phi), phi));
    CHECK(is_identity(compose(phi, psi)));
    CHECK(is_identity(compose(psi, phi)));
    const Morphism other = Morphism::identity(family_context(2, true));
    CHECK_THROWS_AS(compose(other, phi), ContextMismatch);
  }

  TEST_CASE("degree cap monitoring") {
    for (unsigned k = 1; k <= 3; ++k) {
      const FamilyParams params{3, k, Alpha::symbolic()};
      const Morphism phi = make_phi(params), psi = make_psi(params);
      CHECK(max_degree(compose(phi, psi)) <= ComposeOptions{}.degree_cap);
      CHECK(max_degree(compose(psi, phi)) <= ComposeOptions{}.degree_cap);
    }
    const FamilyParams params{1, 2, Alpha::symbolic()};
    CHECK_THROWS_AS(compose(make_phi(params), make_phi(params), ComposeOptions{4}), DegreeCapExceeded);
  }

  TEST_CASE("evaluation") {
    Setup s;
    const Point pi{{"x1", 1}, {"y", 1}, {"z", 1}, {"a", 0}};
    REQUIRE(evaluate(s.q, pi) == 3);
    CHECK(evaluate(s.rf(s.x1, s.q), pi) == Rational(1, 3));
    const Point on_q{{"x1", 1}, {"y", -1}, {"z", 0}, {"a", 0}};
    REQUIRE(evaluate(s.q, on_q) == 0);
    CHECK_THROWS_AS(evaluate(s.rf(Polynomial(s.ctx, Rational(1)), s.q), on_q), PoleError);
    CHECK(evaluate(s.rf(Polynomial(s.ctx, Rational(5))), pi) == 5);
  }

  TEST_CASE("Phi and Psi coordinates against independent expansions") {
    for (const auto& row : oracle()["morphisms"]) {
      const unsigned m = row["m"], k = row["k"];
      const Alpha alpha = Alpha::parse(row["alpha"].get<std::string>());
      const FamilyParams params{m, k, alpha};
      const VarContext ctx = family_context(m, alpha.is_symbolic());
      const Morphism phi = make_phi(params), psi = make_psi(params);
      for (std::size_t i = 0; i < ctx.arity(); ++i) {
        const auto& ph = row["phi"][i];
        const auto& ps = row["psi"][i];
        CHECK(rf_eq(phi.entry(i), RationalFunction(from_oracle(ph["num"], ctx), from_oracle(ph["den"], ctx))));
        CHECK(rf_eq(psi.entry(i), RationalFunction(from_oracle(ps["num"], ctx), from_oracle(ps["den"], ctx))));
      }
      std::vector<Rational> pt;
      for (const auto& v : row["point"]) pt.push_back(parse_rational(v.get<std::string>()));
      const auto image = hypcomp::apply(phi, pt);
      for (std::size_t i = 0; i < image.size(); ++i)
        CHECK(image[i] == parse_rational(row["phi_at_point"][i].get<std::string>()));
      CHECK(evaluate(make_reference(params), pt) == parse_rational(row["q_at_point"].get<std::string>()));
    }
  }

  TEST_CASE("rf_eq is an equivalence relation") {
    std::mt19937_64 rng(21);
    const VarContext ctx({"x1", "y", "z"});
    for (int i = 0; i < 500; ++i) {
      const RationalFunction a = random_rf(rng, ctx);
      Polynomial s(ctx);
      while (s.is_zero()) s = random_polynomial(rng, ctx, 2, 2);
      const RationalFunction scale(s, s);
      const RationalFunction b = a * scale;
      const RationalFunction c = RationalFunction(b.numerator() * s, b.denominator() * s);
      REQUIRE(rf_eq(a, a));
      REQUIRE(rf_eq(a, b) == rf_eq(b, a));
      REQUIRE(rf_eq(a, b));
      REQUIRE(rf_eq(b, c));
      REQUIRE(rf_eq(a, c));
      const RationalFunction d = random_rf(rng, ctx);
      REQUIRE(rf_eq(a, d) == rf_eq(d, a));
    }
  }

  TEST_CASE("pullback is a ring homomorphism") {
    std::mt19937_64 rng(22);
    const VarContext dom({"x1", "y"});
    const VarContext cod({"u", "v", "w"});
    for (int i = 0; i < 500; ++i) {
      const Morphism f = random_morphism(rng, dom, cod);
      const Polynomial p = random_polynomial(rng, cod, 3, 2), q = random_polynomial(rng, cod, 3, 2);
      REQUIRE(rf_eq(pullback(p * q, f), pullback(p, f) * pullback(q, f)));
      REQUIRE(rf_eq(pullback(p + q, f), pullback(p, f) + pullback(q, f)));
    }
  }

  TEST_CASE("composition is associative") {
    std::mt19937_64 rng(23);
    const VarContext ctx({"u", "v"});
    int checked = 0;
    while (checked < 60) {
      const Morphism f = random_morphism(rng, ctx, ctx), g = random_morphism(rng, ctx, ctx),
                     h = random_morphism(rng, ctx, ctx);
      std::optional<Morphism> left, right;
      try {
        left = compose(compose(f, g), h);
        right = compose(f, compose(g, h));
      } catch (const NotInvertible&) {
        continue;  // a composite denominator vanished identically
      } catch (const DivisionByZero&) {
        continue;
      }
      REQUIRE(equal_coordinates(*left, *right));
      ++checked;
    }
  }
}
