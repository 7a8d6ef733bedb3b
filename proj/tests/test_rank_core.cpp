#include <random>
#include <sstream>

#include "doctest.h"
#include "nochka/errors.hpp"
#include "nochka/rank_core.hpp"
#include "test_support.hpp"

using namespace nochka;
using nochka::testing::fixture7_oracle;
using nochka::testing::uniform_oracle;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<Rational> rationals(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("fixture oracle table") {
  const auto c = fixture7_oracle();
  CHECK(c(subset_of({1, 2, 3})) == 1);
  CHECK(c(subset_of({1, 2, 3, 4})) == 2);
  for (Subset s = 0; s < 128; ++s) {
    if (cardinality(s) == 5) CHECK(c(s) == 3);
  }
  // Independent recomputation of every entry.
  const auto vs = nochka::testing::fixture7_vectors();
  for (Subset s = 0; s < 128; ++s) {
    std::vector<std::vector<Rational>> rows;
    for (int i : indices_of(s)) rows.push_back(vs[i - 1]);
    CHECK(c(s) == nochka::testing::brute_rank(rows));
  }
}

TEST_CASE("validate_rank_oracle") {
  SUBCASE("fixture passes all seven axioms") {
    const auto report = validate_rank_oracle(fixture7_oracle());
    CHECK(report.ok());
    CHECK(report.checks.size() == 7);
  }
  SUBCASE("deficient (N+1)-subset fails spanning") {
    auto v = [](long a, long b, long c) { return std::vector<Rational>{a, b, c}; };
    const auto c = linear_matroid_oracle({v(1, 0, 0), v(2, 0, 0), v(3, 0, 0), v(0, 1, 0), v(0, 0, 1)}, 3);
    REQUIRE(c(subset_of({1, 2, 3, 4})) == 2);
    const auto report = validate_rank_oracle(c);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.find("spanning")->passed);
    CHECK(report.find("spanning")->witness.find("{1,2,3,4}") != std::string::npos);
    CHECK(report.find("submodular")->passed);
  }
  SUBCASE("free oracle passes") {
    CHECK(validate_rank_oracle(uniform_oracle(3, 2, 2)).ok());
  }
  SUBCASE("non-submodular table") {
    // c({1})=c({2})=0 but c({1,2})=1: unit steps and monotone hold, submodularity does not.
    const RankOracle c(2, 1, 1, {0, 0, 0, 1});
    const auto report = validate_rank_oracle(c);
    CHECK_FALSE(report.find("submodular")->passed);
    CHECK(report.find("monotone")->passed);
  }
  SUBCASE("jump of two fails unit increments") {
    const RankOracle c(2, 1, 1, {0, 2, 1, 2});
    const auto report = validate_rank_oracle(c);
    CHECK_FALSE(report.find("unit-increment")->passed);
    CHECK_FALSE(report.find("capped")->passed);
  }
  SUBCASE("exchange failure on a non-matroid table") {
    // Ground set {1,2,3}, n=1. {1} independent, c({1,2,3})=2 but neither 2 nor 3
    // raises c({1}) on its own.
    std::vector<int> t(8);
    for (Subset s = 0; s < 8; ++s) t[s] = std::min(cardinality(s), 1);
    t[subset_of({2, 3})] = 2;
    t[subset_of({1, 2, 3})] = 2;
    const RankOracle c(3, 1, 2, t);
    const auto report = validate_rank_oracle(c);
    CHECK_FALSE(report.find("exchange")->passed);
    CHECK_FALSE(nochka::testing::naive_exchange(c));
  }
}

TEST_CASE("rank oracle construction errors") {
  CHECK_THROWS_AS(RankOracle(21, 1, 1, {}), DomainError);
  CHECK_THROWS_AS(RankOracle(1, 1, 1, {0, 3}), DomainError);
  CHECK_THROWS_AS(RankOracle(1, 1, 1, {0, -1}), DomainError);
  CHECK_THROWS_AS(RankOracle(2, 2, 1, {0, 1, 1, 2}), DomainError);
}

TEST_CASE("rho") {
  const auto c = fixture7_oracle();
  CHECK(rho(c, 0, subset_of({1, 2, 3})) == q(1, 3));
  const Subset r = subset_of({4, 5, 6});
  CHECK(rho(c, 0, r) == q(c(r), cardinality(r)));
  CHECK(rho(c, subset_of({1}), subset_of({1, 2})) == 0);
  CHECK_THROWS_AS(rho(c, subset_of({1}), subset_of({1})), DomainError);
  CHECK_THROWS_AS(rho(c, subset_of({1, 4}), subset_of({1, 2})), DomainError);
}

TEST_CASE("build_filtration") {
  SUBCASE("fixture") {
    const auto f = build_filtration(fixture7_oracle());
    REQUIRE(f.length() == 1);
    CHECK(f.subsets[1] == subset_of({1, 2, 3}));
    CHECK(f.ratios[0] == q(1, 3));
    CHECK(f.theta == q(1, 2));
  }
  SUBCASE("N = n gives the empty chain") {
    const auto f = build_filtration(uniform_oracle(5, 2, 2));
    CHECK(f.length() == 0);
    CHECK(f.theta == 1);
  }
  SUBCASE("uniform oracle at q = 2N-n+1") {
    const auto f = build_filtration(uniform_oracle(5, 2, 3));
    CHECK(f.length() == 0);
    CHECK(f.theta == q(3, 5));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(build_filtration(uniform_oracle(4, 2, 3)), DomainError);  // q < 2N-n+1
    const RankOracle bad(2, 1, 1, {0, 0, 0, 1});
    CHECK_THROWS_AS(build_filtration(bad), DomainError);
  }
}

TEST_CASE("nochka_weights") {
  SUBCASE("fixture") {
    const auto c = fixture7_oracle();
    const auto w = nochka_weights(c);
    const std::vector<Rational> expected{q(1, 3), q(1, 3), q(1, 3), q(1, 2), q(1, 2), q(1, 2), q(1, 2)};
    CHECK(w.omega == expected);
    CHECK(w.theta == q(1, 2));
    Rational total = 0;
    for (const auto& x : w.omega) total += x;
    CHECK(total == 3);
    CHECK(total == w.theta * (c.q() - 2 * c.N() + c.n() - 1) + c.n() + 1);
  }
  SUBCASE("N = n") {
    const auto w = nochka_weights(uniform_oracle(4, 2, 2));
    for (const auto& x : w.omega) CHECK(x == 1);
    CHECK(w.theta == 1);
  }
  SUBCASE("uniform oracle") {
    const auto w = nochka_weights(uniform_oracle(5, 2, 3));
    for (const auto& x : w.omega) CHECK(x == q(3, 5));
  }
}

TEST_CASE("verify_weight_conditions failures") {
  const auto c = fixture7_oracle();
  SUBCASE("all ones") {
    const auto report = verify_weight_conditions(c, std::vector<Rational>(7, Rational(1)), Rational(1));
    const auto* iv = report.find("(iv) subset sums");
    CHECK_FALSE(iv->passed);
    CHECK(iv->witness.rfind("R={1,2}: 2 > c=1", 0) == 0);
  }
  SUBCASE("constant theta") {
    const Rational t = q(3, 7);
    const auto report = verify_weight_conditions(c, std::vector<Rational>(7, t), t);
    const auto* iv = report.find("(iv) subset sums");
    CHECK_FALSE(iv->passed);
    // 3 * 3/7 = 9/7 > 1 at {1,2,3}; smaller sets pass since 2*3/7 < 1.
    CHECK(iv->witness.rfind("R={1,2,3}: 9/7 > c=1", 0) == 0);
  }
  SUBCASE("wrong length") {
    CHECK_FALSE(verify_weight_conditions(c, {Rational(1)}, Rational(1)).ok());
  }
}

TEST_CASE("greedy_select") {
  const auto c = fixture7_oracle();
  const auto w = nochka_weights(c);
  SUBCASE("fixture example") {
    const auto sel = greedy_select(c, w, subset_of({1, 2, 3, 4}), rationals({4, 3, 2, 1, 0, 0, 0}));
    CHECK(sel.indices == std::vector<int>{1, 4});
    CHECK(sel.weighted_sum == q(7, 2));
    CHECK(sel.selected_sum == 5);
  }
  SUBCASE("constant E reduces to subset-sum condition") {
    for (Subset r = 1; r < 128; ++r) {
      if (cardinality(r) > c.N() + 1) continue;
      const auto sel = greedy_select(c, w, r, std::vector<Rational>(7, Rational(1)));
      CHECK(static_cast<int>(sel.indices.size()) == c(r));
      CHECK(sel.selected_sum == c(r));
    }
  }
  SUBCASE("singleton") {
    const auto sel = greedy_select(c, w, subset_of({5}), rationals({1, 2, 3, 4, 5, 6, 7}));
    CHECK(sel.indices == std::vector<int>{5});
    CHECK(sel.weighted_sum == q(5, 2));
  }
  SUBCASE("ties use ascending index") {
    const auto sel = greedy_select(c, w, subset_of({2, 3, 5}), rationals({0, 1, 1, 0, 1, 0, 0}));
    CHECK(sel.indices == std::vector<int>{2, 5});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(greedy_select(c, w, 0, rationals({1, 1, 1, 1, 1, 1, 1})), DomainError);
    CHECK_THROWS_AS(greedy_select(c, w, subset_of({1, 2, 3, 4, 5, 6}), rationals({1, 1, 1, 1, 1, 1, 1})),
                    DomainError);
    CHECK_THROWS_AS(greedy_select(c, w, subset_of({1}), rationals({-1, 1, 1, 1, 1, 1, 1})), DomainError);
  }
}

TEST_CASE("linear_matroid_oracle") {
  SUBCASE("standard basis gives the free oracle") {
    const auto c = linear_matroid_oracle({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2);
    CHECK(c == uniform_oracle(3, 2, 2));
    CHECK(validate_rank_oracle(c).ok());
  }
  SUBCASE("collinear triple fails spanning") {
    const auto c = linear_matroid_oracle({{1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {1, 1, 1}}, 2);
    CHECK(c(subset_of({1, 2, 3})) == 1);
    CHECK_FALSE(validate_rank_oracle(c).find("spanning")->passed);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(linear_matroid_oracle({{0, 0, 0}}, 2), DomainError);
    CHECK_THROWS_AS(linear_matroid_oracle({{1, 0, 0}, {1, 0}}, 2), DomainError);
  }
}

TEST_CASE("oracle text format") {
  const auto c = fixture7_oracle();
  std::stringstream ss;
  write_rank_oracle(ss, c);
  CHECK(ss.str().rfind("7 2 4\n- : 0\n1 : 1\n2 : 1\n1,2 : 1\n", 0) == 0);
  CHECK(read_rank_oracle(ss) == c);

  std::istringstream bad("2 1 1\n- : 0\n1 : 1\n");
  CHECK_THROWS_AS(read_rank_oracle(bad), ParseError);
  std::istringstream garbage("2 1 1\n- : 0\n1 : 1\n2 : 1\nx : 1\n");
  CHECK_THROWS_AS(read_rank_oracle(garbage), ParseError);
}

TEST_CASE("properties over random linear-matroid oracles") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = nochka::testing::random_valid_matroid(rng, 8, 3, 5);
    const auto& c = m.oracle;
    INFO("trial " << trial << " q=" << c.q() << " n=" << c.n() << " N=" << c.N());
    REQUIRE(validate_rank_oracle(c).ok());
    CHECK(nochka::testing::naive_submodular(c));
    CHECK(nochka::testing::naive_exchange(c));

    const auto f = build_filtration(c);
    const auto naive = nochka::testing::naive_filtration(c);
    CHECK(f.subsets == naive.subsets);
    CHECK(f.ratios == naive.ratios);
    CHECK(f.theta == naive.theta);
    CHECK(build_filtration(c).subsets == f.subsets);

    const auto w = nochka_weights(c);
    CHECK(verify_weight_conditions(c, w).ok());
    if (c.N() == c.n()) {
      for (const auto& x : w.omega) CHECK(x == 1);
    }

    std::uniform_int_distribution<Subset> pick(1, full_set(c.q()));
    for (int k = 0; k < 10; ++k) {
      Subset r = pick(rng);
      while (cardinality(r) > c.N() + 1) r &= r - 1;
      std::vector<Rational> e(c.q());
      for (auto& x : e) x = nochka::testing::random_nonnegative_rational(rng);
      const auto sel = greedy_select(c, w, r, e);
      CHECK(sel.weighted_sum <= sel.selected_sum);
      std::vector<Rational> scaled = e;
      for (auto& x : scaled) x *= q(7, 3);
      const auto sel2 = greedy_select(c, w, r, scaled);
      CHECK(sel2.indices == sel.indices);
      CHECK(sel2.weighted_sum == sel.weighted_sum * q(7, 3));
    }
  }
}
