#include <random>

#include "doctest.h"
#include "nochka/errors.hpp"
#include "nochka/poly.hpp"

using namespace nochka;

namespace {

const std::vector<std::string> kXYZ{"x0", "x1", "x2"};
const std::vector<std::string> kX4{"x0", "x1", "x2", "x3"};

Polynomial P(std::string_view s, const std::vector<std::string>& names = kXYZ) {
  return parse_polynomial(s, names);
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg, int terms) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++m.exponents[var(rng)];
    m.degree = d;
    Rational c(coef(rng), 1 + std::abs(coef(rng)));
    c.canonicalize();
    ts.push_back({m, c});
  }
  return Polynomial::from_terms(nvars, ts);
}

Polynomial random_homogeneous(std::mt19937_64& rng, std::size_t nvars, int d, int terms) {
  std::uniform_int_distribution<int> coef(-4, 4);
  const auto monos = monomials_of_degree(nvars, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) ts.push_back({monos[pick(rng)], Rational(coef(rng))});
  return Polynomial::from_terms(nvars, ts);
}

}  // namespace

TEST_CASE("parse_polynomial") {
  SUBCASE("conic") {
    const auto p = P("x0*x2 - x1^2");
    CHECK(p.degree() == 2);
    CHECK(p.terms().size() == 2);
    CHECK(p.is_homogeneous());
  }
  SUBCASE("rational coefficient") {
    const auto p = P("1/2*x0^3 + x1*x2^2");
    CHECK(p.terms().size() == 2);
    Monomial m({3, 0, 0});
    CHECK(p.coeff(m) == Rational(1, 2));
  }
  SUBCASE("homogeneity demanded") {
    CHECK_THROWS_AS(parse_polynomial("x0 + x1^2", kXYZ, {.require_homogeneous = true}), ParseError);
    CHECK_NOTHROW(parse_polynomial("x0 + x1^2", kXYZ));
  }
  SUBCASE("whitespace and signs") {
    CHECK(P(" - x0 *x1 ^ 2+3 ") == P("3-x0*x1^2"));
    CHECK(P("x0*x0") == P("x0^2"));
    CHECK(P("x0 - x0").is_zero());
  }
  SUBCASE("errors carry positions") {
    try {
      P("x0 + y1");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(P("x0 +"), ParseError);
    CHECK_THROWS_AS(P("x0 x1"), ParseError);
    CHECK_THROWS_AS(P("2x0"), ParseError);
    CHECK_THROWS_AS(P("x0^0"), ParseError);
    CHECK_THROWS_AS(P("1/0*x0"), ParseError);
    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0 - x0", kXYZ, {.require_nonzero = true}), ParseError);
  }
  SUBCASE("printing reparses") {
    const auto p = P("-1/2*x0^3 + x1*x2^2 - 7*x2^3 + x0*x1*x2");
    CHECK(P(p.to_string(kXYZ)) == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 3, 3, 4);
    const auto b = random_poly(rng, 3, 3, 4);
    const auto c = random_poly(rng, 3, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("term orders") {
  const Monomial x1sq({0, 2, 0}), x0x2({1, 0, 1});
  CHECK(compare(x1sq, x0x2, TermOrder::DegRevLex) > 0);
  CHECK(compare(x1sq, x0x2, TermOrder::Lex) < 0);
  CHECK(monomials_of_degree(3, 2).size() == 6);
  CHECK(monomials_of_degree(3, 2).front() == Monomial({2, 0, 0}));
}

TEST_CASE("groebner_basis") {
  SUBCASE("already reduced") {
    const auto g = groebner_basis({P("x0"), P("x1")});
    REQUIRE(g.size() == 2);
    CHECK(g[0] == P("x0"));
    CHECK(g[1] == P("x1"));
  }
  SUBCASE("twisted cubic") {
    const std::vector<Polynomial> gens{P("x0*x2 - x1^2", kX4), P("x1*x3 - x2^2", kX4), P("x0*x3 - x1*x2", kX4)};
    const auto g = groebner_basis(gens);
    CHECK(g.size() == 3);
    for (const auto& f : gens) CHECK(normal_form(f, g).is_zero());
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(g[i].leading_coeff() == 1);
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        const Monomial l = lcm(g[i].leading_monomial(), g[j].leading_monomial());
        const auto s = Polynomial::monomial(l / g[i].leading_monomial(), Rational(1)) * g[i] -
                       Polynomial::monomial(l / g[j].leading_monomial(), Rational(1)) * g[j];
        CHECK(normal_form(s, g).is_zero());
      }
    }
    CHECK(groebner_basis(g) == g);
  }
  SUBCASE("duplicate generators collapse") {
    const auto f = P("x0^2 + 3*x1*x2");
    CHECK(groebner_basis({f, f}) == groebner_basis({f}));
    CHECK(groebner_basis({f, f}).size() == 1);
  }
  SUBCASE("lex order") {
    const auto g = groebner_basis({P("x0*x2 - x1^2"), P("x0 - x2")}, {.order = TermOrder::Lex});
    for (const auto& p : g) CHECK(p.order() == TermOrder::Lex);
    CHECK(normal_form(P("x1^2 - x2^2").with_order(TermOrder::Lex), g).is_zero());
  }
  SUBCASE("step budget") {
    const std::vector<Polynomial> gens{P("x0*x2 - x1^2", kX4), P("x1*x3 - x2^2", kX4), P("x0*x3 - x1*x2", kX4)};
    CHECK_THROWS_AS(groebner_basis(gens, {.max_steps = 0}), ResourceError);
  }
}

TEST_CASE("normal_form") {
  CHECK(normal_form(P("x1^2"), groebner_basis({P("x0*x2 - x1^2")})) == P("x0*x2"));
  const auto g = P("x0^2*x1 - 2*x2^3");
  CHECK(normal_form(g, groebner_basis({g})).is_zero());
  const auto one = Polynomial::constant(3, Rational(1));
  CHECK(normal_form(one, groebner_basis({P("x0"), P("x1"), P("x2")})) == one);

  std::mt19937_64 rng(11);
  const Ideal ideal(3, {P("x0*x2 - x1^2"), P("x0^3 - x1*x2^2")});
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_poly(rng, 3, 4, 5);
    const auto b = random_poly(rng, 3, 4, 5);
    CHECK(normal_form(a + b, ideal) == normal_form(a, ideal) + normal_form(b, ideal));
    CHECK(normal_form(a * Rational(3, 5), ideal) == normal_form(a, ideal) * Rational(3, 5));
  }
}

TEST_CASE("ideal_dimension") {
  CHECK(ideal_dimension(Ideal(3, {P("x0")})) == 1);
  CHECK(ideal_dimension(Ideal(3, {P("x0"), P("x1"), P("x2")})) == -1);
  CHECK(ideal_dimension(Ideal(3, {P("x0*x2 - x1^2")})) == 1);
  CHECK(ideal_dimension(Ideal(3, {})) == 2);
  CHECK(ideal_dimension(Ideal(3, {P("x1"), P("x2"), P("x1 + x2")})) == 0);
  CHECK(ideal_dimension(Ideal(3, {P("x0^2 - x1*x2"), P("x1^2"), P("x2^3 + x0*x1^2")})) == -1);
  CHECK(ideal_dimension(Ideal(4, {P("x0*x2 - x1^2", kX4), P("x1*x3 - x2^2", kX4), P("x0*x3 - x1*x2", kX4)})) == 1);
  CHECK_THROWS_AS(Ideal(3, {P("x0 + x1^2")}), DomainError);

  SUBCASE("redundant generators do not change the dimension") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
      const auto f = random_homogeneous(rng, 3, 2, 3);
      const auto g = random_homogeneous(rng, 3, 1, 2);
      if (f.is_zero() || g.is_zero()) continue;
      const Ideal base(3, {f, g});
      const auto h = random_homogeneous(rng, 3, 1, 2);
      const auto redundant = f * h + g * random_homogeneous(rng, 3, 2, 2);
      if (redundant.is_zero() || !redundant.is_homogeneous()) continue;
      CHECK(ideal_dimension(base) == ideal_dimension(base.with({redundant})));
    }
  }
}

TEST_CASE("degree_m_slice_rank") {
  CHECK(degree_m_slice_rank(Ideal(3, {}), 4) == 0);
  CHECK(degree_m_slice_rank(Ideal(3, {P("x0*x2 - x1^2")}), 2) == 1);
  CHECK(degree_m_slice_rank(Ideal(3, {P("x0"), P("x1"), P("x2")}), 1) == 3);

  SUBCASE("monomial ideals against direct counting") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> e(0, 3);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> gens;
      std::vector<Monomial> monos;
      for (int k = 0; k < 3; ++k) {
        Monomial m(std::vector<int>{e(rng), e(rng), e(rng)});
        if (m.degree == 0) continue;
        monos.push_back(m);
        gens.push_back(Polynomial::monomial(m, Rational(1)));
      }
      const Ideal ideal(3, gens);
      for (int m = 0; m <= 6; ++m) {
        long divisible = 0;
        for (const auto& mono : monomials_of_degree(3, m)) {
          bool hit = false;
          for (const auto& g : monos) hit = hit || g.divides(mono);
          divisible += hit;
        }
        CHECK(degree_m_slice_rank(ideal, m) == divisible);
      }
    }
  }
}
