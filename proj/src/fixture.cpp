#include "nochka/fixture.hpp"

#include <array>
#include <numeric>
#include <optional>
#include <random>

#include "nochka/errors.hpp"

namespace nochka {

namespace {

using Point = std::array<long, 3>;

const std::vector<std::string> kVars{"x0", "x1", "x2"};

Point cross(const Point& a, const Point& b) {
  Point c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  const long g = std::gcd(std::gcd(c[0], c[1]), c[2]);
  if (g > 1) {
    for (auto& x : c) x /= g;
  }
  return c;
}

bool is_zero_point(const Point& p) { return p[0] == 0 && p[1] == 0 && p[2] == 0; }

// Coefficients of x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
using Conic = std::array<long, 6>;

long eval(const Conic& c, const Point& p) {
  return c[0] * p[0] * p[0] + c[1] * p[0] * p[1] + c[2] * p[0] * p[2] + c[3] * p[1] * p[1] + c[4] * p[1] * p[2] +
         c[5] * p[2] * p[2];
}

Polynomial conic_poly(const Conic& c) {
  static const std::vector<std::vector<int>> exps = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
  std::vector<Term> terms;
  for (std::size_t k = 0; k < 6; ++k) terms.push_back({Monomial(exps[k]), Rational(c[k])});
  return Polynomial::from_terms(3, terms);
}

Polynomial line_poly(const Point& l) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<int> e(3, 0);
    e[i] = 1;
    terms.push_back({Monomial(e), Rational(l[i])});
  }
  return Polynomial::from_terms(3, terms);
}

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Point point() {
    Point p;
    do {
      p = {small(-3, 3), small(-3, 3), small(-3, 3)};
    } while (is_zero_point(p));
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

std::optional<Arrangement> candidate(Draw& draw) {
  const Point a1{1, draw.small(-2, 2), draw.small(-2, 2)};
  std::array<Conic, 3> conics;
  for (auto& c : conics) {
    for (std::size_t k = 1; k < 6; ++k) c[k] = draw.small(-3, 3);
    c[0] = 0;
    c[0] = -eval(c, a1);  // a1[0] == 1 so this forces c(a1) = 0
  }
  const Point a2 = draw.point();
  const Point a3 = draw.point();
  const Point a4 = draw.point();
  for (const auto& c : conics) {
    if (eval(c, a2) == 0 || eval(c, a3) == 0 || eval(c, a4) == 0) return std::nullopt;
  }
  // Second intersection of the conic with the line through a1 in direction v.
  std::array<Point, 3> b;
  for (std::size_t i = 0; i < 3; ++i) {
    const Point v = draw.point();
    const Point sum{a1[0] + v[0], a1[1] + v[1], a1[2] + v[2]};
    const long polar = eval(conics[i], sum) - eval(conics[i], v);
    const long gv = eval(conics[i], v);
    b[i] = {gv * a1[0] - polar * v[0], gv * a1[1] - polar * v[1], gv * a1[2] - polar * v[2]};
    if (is_zero_point(b[i]) || is_zero_point(cross(b[i], a1))) return std::nullopt;
  }
  Arrangement arr;
  arr.M = 2;
  arr.n = 2;
  arr.N = 3;
  arr.degV = 1;
  arr.vars = kVars;
  for (std::size_t i = 0; i < 3; ++i) arr.hypersurfaces.push_back({"G" + std::to_string(i + 1), conic_poly(conics[i])});
  for (const auto& [name, a] : {std::pair<std::string, Point>{"A2", a2}, {"A3", a3}}) {
    for (std::size_t i = 0; i < 3; ++i) {
      const Point l = cross(b[i], a);
      if (is_zero_point(l)) return std::nullopt;
      arr.hypersurfaces.push_back({name + "B" + std::to_string(i + 1), line_poly(l)});
    }
  }
  for (int k = 1; k <= 3; ++k) {
    const Point l = cross(a4, draw.point());
    if (is_zero_point(l)) return std::nullopt;
    arr.hypersurfaces.push_back({"L" + std::to_string(k), line_poly(l)});
  }
  return arr;
}

}  // namespace

IntroFixture generate_intro_fixture(std::uint64_t seed, int max_attempts) {
  Draw draw(seed);
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    auto arr = candidate(draw);
    if (!arr) continue;
    try {
      check_arrangement(*arr);
    } catch (const DomainError&) {
      continue;
    }
    PositionReport pos = check_subgeneral_position(*arr);
    if (pos.passed()) return IntroFixture{std::move(*arr), attempt, std::move(pos)};
  }
  throw ResourceError("no arrangement in 3-subgeneral position after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace nochka
