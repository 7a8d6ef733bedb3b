#include "nochka/nevanlinna.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "nochka/errors.hpp"
#include "nochka/linalg.hpp"

namespace nochka {

namespace {

using cd = std::complex<double>;

std::vector<ExpPolyEvaluator> evaluators(const Curve& curve) {
  std::vector<ExpPolyEvaluator> out;
  for (const auto& f : curve.coords) out.emplace_back(f);
  return out;
}

double log_norm(const std::vector<ExpPolyEvaluator>& fs, cd z) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& f : fs) best = std::max(best, f.log_abs(z));
  return best;
}

void check_radius(double r) {
  if (!(r >= 1)) throw DomainError("radius must be at least 1, got " + std::to_string(r));
}

ZeroDivisor divisor_for(const ExpPoly& f, double R, const ZeroOptions& options) {
  return f.is_polynomial() ? zero_divisor(f.as_polynomial(), options) : zero_divisor(f, R, options);
}

// Steps r up by factors 1+1e-6 until every known zero is at least 1e-4 r away
// from the circle; closer zeros make the trapezoid rule converge too slowly.
double clear_radius(double r, const std::vector<const ZeroDivisor*>& divisors) {
  for (int attempt = 0; attempt < 4000; ++attempt) {
    bool hit = false;
    for (const auto* d : divisors) {
      for (const auto& e : d->entries) {
        if (std::abs(std::abs(e.location) - r) < 1e-4 * r) hit = true;
      }
    }
    if (!hit) return r;
    r *= 1.0 + 1e-6;
  }
  throw ResourceError("could not move the circle off known zeros");
}

}  // namespace

QuadratureResult characteristic(const Curve& curve, double r, const QuadratureOptions& options) {
  check_radius(r);
  const auto fs = evaluators(curve);
  return circle_mean([&](cd z) { return log_norm(fs, z); }, r, options);
}

double coefficient_norm(const Polynomial& q) { return q.max_abs_coeff().get_d(); }

QuadratureResult proximity(const Curve& curve, const Polynomial& q, double r, const QuadratureOptions& options) {
  check_radius(r);
  const ExpPoly qf = compose(q, curve);
  if (qf.is_zero()) throw DomainError("target vanishes identically on the curve");
  const auto fs = evaluators(curve);
  const ExpPolyEvaluator target(qf);
  const double d = q.degree();
  const double log_q = std::log(coefficient_norm(q));
  return circle_mean([&](cd z) { return d * log_norm(fs, z) + log_q - target.log_abs(z); }, r, options);
}

ConstancyReport jensen_check(const ExpPoly& phi, const std::vector<double>& radii, const QuadratureOptions& quad,
                             const ZeroOptions& zeros) {
  if (phi.is_zero()) throw DomainError("jensen_check of the zero function");
  if (radii.empty()) throw DomainError("no radii");
  for (double r : radii) check_radius(r);
  const double r_max = *std::max_element(radii.begin(), radii.end());
  const ZeroDivisor div = divisor_for(phi, r_max * (1.0 + 1e-3), zeros);
  const ExpPolyEvaluator eval(phi);

  ConstancyReport report;
  for (double r : radii) {
    const double rr = clear_radius(r, {&div});
    const auto integral = circle_mean([&](cd z) { return eval.log_abs(z); }, rr, quad);
    report.radii.push_back(integral.radius);
    report.differences.push_back(integral.value - counting_function(div, integral.radius));
  }
  report.constant = std::accumulate(report.differences.begin(), report.differences.end(), 0.0) /
                    static_cast<double>(report.differences.size());
  for (double d : report.differences) report.max_deviation = std::max(report.max_deviation, std::abs(d - report.constant));

  if (phi.is_polynomial()) {
    const QIPoly p = phi.as_polynomial();
    double c = std::log(std::abs(p.leading().to_complex()));
    for (const auto& e : div.entries) {
      if (std::abs(e.location) >= 1) c += e.multiplicity * std::log(std::abs(e.location));
    }
    report.predicted = c;
  } else if (const double a0 = eval.log_abs(0.0); std::isfinite(a0)) {
    double c = a0;
    for (const auto& e : div.entries) {
      if (std::abs(e.location) < 1) c -= e.multiplicity * std::log(std::abs(e.location));
    }
    report.predicted = c;
  }
  return report;
}

QIPoly wronskian(const std::vector<QIPoly>& functions) {
  const std::size_t k = functions.size();
  if (k == 0) return QIPoly(GaussRational(1));
  std::vector<std::vector<QIPoly>> a(k, std::vector<QIPoly>(k));
  for (std::size_t j = 0; j < k; ++j) {
    QIPoly d = functions[j];
    for (std::size_t i = 0; i < k; ++i) {
      a[i][j] = d;
      d = d.derivative();
    }
  }
  bool negate = false;
  QIPoly prev(GaussRational(1));
  for (std::size_t p = 0; p + 1 < k; ++p) {
    if (a[p][p].is_zero()) {
      std::size_t r = p + 1;
      while (r < k && a[r][p].is_zero()) ++r;
      if (r == k) return QIPoly();
      std::swap(a[p], a[r]);
      negate = !negate;
    }
    for (std::size_t i = p + 1; i < k; ++i) {
      for (std::size_t j = p + 1; j < k; ++j) {
        a[i][j] = exact_div(a[i][j] * a[p][p] - a[i][p] * a[p][j], prev);
      }
      a[i][p] = QIPoly();
    }
    prev = a[p][p];
  }
  QIPoly det = a[k - 1][k - 1];
  if (negate) det = -det;
  return det;
}

WronskianDivisorReport wronskian_divisor_check(const std::vector<QIPoly>& coords) {
  if (coords.size() < 2) throw DomainError("need at least two coordinates");
  QIPoly g;
  for (const auto& f : coords) g = gcd(g, f);
  if (g.degree() != 0) throw DomainError("coordinates share the factor " + g.to_string() + " (not reduced)");
  WronskianDivisorReport report;
  report.wronskian = wronskian(coords);
  if (report.wronskian.is_zero()) throw DomainError("coordinates are linearly dependent (Wronskian vanishes)");

  const int M = static_cast<int>(coords.size()) - 1;
  std::vector<QIPoly> all = coords;
  all.push_back(report.wronskian);
  for (const auto& b : gcd_free_basis(all)) {
    WronskianDivisorEntry e;
    e.factor = b;
    for (const auto& f : coords) {
      const int o = f.is_zero() ? 0 : multiplicity(f, b);
      e.orders.push_back(o);
      e.ord_product += o;
      e.rhs += std::min(o, M);
    }
    if (e.ord_product == 0) continue;  // not a zero of f_0...f_M
    e.ord_wronskian = multiplicity(report.wronskian, b);
    e.lhs = e.ord_product - e.ord_wronskian;
    if (e.lhs > e.rhs && report.passed) {
      report.passed = false;
      report.witness = "at roots of " + b.to_string() + ": " + std::to_string(e.lhs) + " > " + std::to_string(e.rhs);
    }
    if (e.lhs == e.rhs && e.rhs > 0) report.equality = true;
    report.entries.push_back(std::move(e));
  }
  return report;
}

CartanReport cartan_ru_check(const Curve& curve, const std::vector<std::vector<Rational>>& hyperplanes,
                             const Rational& epsilon, const std::vector<double>& radii,
                             const QuadratureOptions& options) {
  if (!curve.is_polynomial()) throw DomainError("cartan_ru_check needs a polynomial curve");
  const int n = curve.M();
  const auto coords = curve.polynomial_coords();
  CartanReport report;
  report.wronskian = wronskian(coords);
  if (report.wronskian.is_zero()) throw DomainError("curve is linearly degenerate (Wronskian vanishes)");
  if (sgn(epsilon) <= 0) throw DomainError("epsilon must be positive");

  const int q = static_cast<int>(hyperplanes.size());
  if (q > static_cast<int>(kMaxGroundSet)) throw DomainError("too many hyperplanes");
  std::vector<ExpPolyEvaluator> targets;
  std::vector<double> log_norms;
  for (const auto& h : hyperplanes) {
    if (static_cast<int>(h.size()) != n + 1) throw DomainError("hyperplane vector has the wrong length");
    std::vector<Term> terms;
    Rational norm;
    for (int i = 0; i <= n; ++i) {
      Monomial m(static_cast<std::size_t>(n + 1));
      m.exponents[static_cast<std::size_t>(i)] = 1;
      m.degree = 1;
      terms.push_back({m, h[static_cast<std::size_t>(i)]});
      norm = std::max(norm, Rational(abs(h[static_cast<std::size_t>(i)])));
    }
    if (sgn(norm) == 0) throw DomainError("zero hyperplane");
    const Polynomial hp = Polynomial::from_terms(static_cast<std::size_t>(n + 1), terms);
    const ExpPoly hf = compose(hp, curve);
    if (hf.is_zero()) throw DomainError("curve lies in a hyperplane");
    targets.emplace_back(hf);
    log_norms.push_back(std::log(norm.get_d()));
  }
  const RankOracle rank = linear_matroid_oracle(hyperplanes, std::max(n, 1));
  std::vector<Subset> family;
  for (Subset s = 1; q > 0 && s <= full_set(q); ++s) {
    if (cardinality(s) == n + 1 && rank(s) == n + 1) {
      family.push_back(s);
      report.family.push_back(indices_of(s));
    }
  }
  const auto fs = evaluators(curve);
  const ZeroDivisor wdiv = zero_divisor(report.wronskian.degree() > 0 ? report.wronskian : QIPoly(GaussRational(1)));
  const double factor = Rational(Rational(n + 1) + epsilon).get_d();
  std::vector<double> e(static_cast<std::size_t>(q));
  for (double r : radii) {
    check_radius(r);
    CartanRow row;
    row.requested_radius = r;
    const auto integral = circle_mean(
        [&](cd z) {
          if (family.empty()) return 0.0;
          const double ln = log_norm(fs, z);
          for (int j = 0; j < q; ++j) e[static_cast<std::size_t>(j)] = ln + log_norms[static_cast<std::size_t>(j)] - targets[static_cast<std::size_t>(j)].log_abs(z);
          double best = -std::numeric_limits<double>::infinity();
          for (Subset s : family) {
            double sum = 0;
            for (int j : indices_of(s)) sum += e[static_cast<std::size_t>(j - 1)];
            best = std::max(best, sum);
          }
          return best;
        },
        r, options);
    row.radius = integral.radius;
    row.integral = integral.value;
    row.wronskian_count = counting_function(wdiv, row.radius);
    row.T = characteristic(curve, row.radius, options).value;
    row.lhs = row.integral + row.wronskian_count;
    row.rhs = factor * row.T;
    row.slack = row.rhs - row.lhs;
    report.rows.push_back(row);
  }
  report.caveat =
      "the inequality holds outside a possible exceptional set of radii; negative slack at isolated radii is "
      "reported, not treated as failure";
  return report;
}

void check_curve_in_variety(const Curve& curve, const Arrangement& arr) {
  if (curve.M() != arr.M) {
    throw DomainError("curve lives in P^" + std::to_string(curve.M()) + ", arrangement in P^" + std::to_string(arr.M));
  }
  for (const auto& g : arr.variety) {
    if (!compose(g, curve).is_zero()) throw DomainError("curve does not lie in V: " + g.to_string(arr.vars));
  }
}

LiftResult lift_curve(const Curve& curve, const Arrangement& arr, int m, long max_qm) {
  check_curve_in_variety(curve, arr);
  if (m < 1) throw DomainError("m must be at least 1");
  const int q = arr.q();
  const BigInt qm = binomial(static_cast<unsigned long>(q + m - 1), static_cast<unsigned long>(m));
  if (qm > max_qm) throw ResourceError("q_m = " + qm.get_str() + " exceeds the cap " + std::to_string(max_qm));
  std::vector<ExpPoly> g;
  for (const auto& p : arr.equalized()) g.push_back(compose(p, curve));

  LiftResult out;
  out.m = m;
  std::map<std::vector<int>, ExpPoly> cache;
  cache.emplace(std::vector<int>(static_cast<std::size_t>(q), 0), ExpPoly(QIPoly(GaussRational(1))));
  for (const auto& mono : monomials_of_degree(static_cast<std::size_t>(q), m)) {
    std::vector<int> lower = mono.exponents;
    std::size_t j = 0;
    while (lower[j] == 0) ++j;
    --lower[j];
    // Exponents arrive lex-descending, so each predecessor is either cached or
    // built on the spot from its own chain.
    std::vector<int> key = lower;
    std::vector<std::size_t> chain;
    while (!cache.count(key)) {
      std::size_t t = 0;
      while (key[t] == 0) ++t;
      --key[t];
      chain.push_back(t);
    }
    ExpPoly value = cache.at(key);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      ++key[*it];
      value = value * g[*it];
      cache.emplace(key, value);
    }
    ExpPoly f = value * g[j];
    out.exponents.push_back(mono.exponents);
    cache.emplace(mono.exponents, f);
    out.F.push_back(std::move(f));
  }
  out.q_m = static_cast<long>(out.F.size());

  std::map<std::pair<QIPoly, int>, std::size_t> columns;
  for (const auto& f : out.F) {
    for (const auto& t : f.terms()) {
      for (int k = 0; k <= t.prefactor.degree(); ++k) columns.emplace(std::make_pair(t.exponent, k), 0);
    }
  }
  std::size_t next = 0;
  for (auto& [key, idx] : columns) idx = next++;
  EchelonBasis<GaussRational> basis(columns.size());
  for (const auto& f : out.F) {
    std::vector<GaussRational> row(columns.size());
    for (const auto& t : f.terms()) {
      for (int k = 0; k <= t.prefactor.degree(); ++k) row[columns.at({t.exponent, k})] = t.prefactor.coeff(k);
    }
    basis.insert(std::move(row));
  }
  out.rank = static_cast<long>(basis.rank());
  out.relation_dim = out.q_m - out.rank;
  out.degenerate = out.rank <= 1;
  return out;
}

std::pair<double, double> max_term_gap(const Curve& curve, const Arrangement& arr, const std::vector<int>& J, double r,
                                       int samples) {
  check_curve_in_variety(curve, arr);
  const auto eq = arr.equalized();
  std::vector<ExpPolyEvaluator> targets;
  for (int j : J) {
    if (j < 1 || j > arr.q()) throw DomainError("target index out of range");
    const ExpPoly g = compose(eq[static_cast<std::size_t>(j - 1)], curve);
    if (g.is_zero()) throw DomainError("target vanishes on the curve");
    targets.emplace_back(g);
  }
  const auto fs = evaluators(curve);
  const double d = static_cast<double>(arr.common_degree());
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int s = 0; s < samples; ++s) {
    const cd z = std::polar(r, 2.0 * std::numbers::pi * (s + 0.5) / samples);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& t : targets) best = std::max(best, t.log_abs(z));
    const double gap = d * log_norm(fs, z) - best;
    lo = std::min(lo, gap);
    hi = std::max(hi, gap);
  }
  return {lo, hi};
}

SmtReport smt_report(const Curve& curve, const Arrangement& arr, const SmtOptions& options) {
  check_curve_in_variety(curve, arr);
  if (options.radii.empty()) throw DomainError("no radii");
  for (double r : options.radii) check_radius(r);
  if (!std::is_sorted(options.radii.begin(), options.radii.end())) throw DomainError("radii must be ascending");
  if (sgn(options.epsilon) <= 0) throw DomainError("epsilon must be positive");

  SmtReport report;
  const auto position = check_subgeneral_position(arr);
  report.position_condition_i = position.condition_i;
  report.position_condition_ii_proxy = position.condition_ii;
  if (!position.condition_i) {
    throw DomainError("arrangement is not in " + std::to_string(arr.N) + "-subgeneral position: " +
                      position.condition_i_witness + " meets V");
  }
  if (!position.condition_ii) {
    report.caveats.push_back("condition (ii) proxy failed: " + position.oracle_axioms.summary());
  }

  const auto degrees = arr.degrees();
  const bool hyperplane = arr.variety.empty() &&
                          std::all_of(degrees.begin(), degrees.end(), [](int d) { return d == 1; });
  report.mode = hyperplane ? SmtMode::Hyperplane : SmtMode::Hypersurface;
  report.n = arr.n;
  report.N = arr.N;
  report.q = arr.q();
  report.epsilon = options.epsilon;
  report.coefficient = arr.q() - 2 * arr.N + arr.n - 1;

  const std::size_t q = static_cast<std::size_t>(arr.q());
  if (options.truncation.empty()) {
    report.truncation.assign(q, hyperplane ? std::optional<int>(arr.n) : std::nullopt);
    report.truncation_source = hyperplane ? "default: n" : "default: untruncated";
  } else if (options.truncation.size() == 1) {
    report.truncation.assign(q, options.truncation.front());
    report.truncation_source = "user";
  } else if (options.truncation.size() == q) {
    report.truncation = options.truncation;
    report.truncation_source = "user";
  } else {
    throw DomainError("truncation list must have 1 or q entries");
  }

  std::vector<ExpPoly> composed;
  std::vector<ZeroDivisor> divisors;
  const double r_max = options.radii.back();
  for (const auto& h : arr.hypersurfaces) {
    composed.push_back(compose(h.poly, curve));
    if (composed.back().is_zero()) throw DomainError("target " + h.name + " vanishes identically on the curve");
    divisors.push_back(divisor_for(composed.back(), r_max * (1.0 + 1e-3), options.zeros));
  }
  std::vector<const ZeroDivisor*> div_ptrs;
  for (const auto& d : divisors) div_ptrs.push_back(&d);

  const double lhs_factor = Rational(Rational(report.coefficient) - options.epsilon).get_d();
  for (double requested : options.radii) {
    SmtRadiusRow row;
    row.requested_radius = requested;
    double r = clear_radius(requested, div_ptrs);
    // Quadrature may move the radius again; redo everything at the final one.
    for (int pass = 0; pass < 4; ++pass) {
      const auto T = characteristic(curve, r, options.quadrature);
      r = T.radius;
      row.T = T.value;
      row.targets.clear();
      bool moved = false;
      for (std::size_t j = 0; j < q && !moved; ++j) {
        const auto m = proximity(curve, arr.hypersurfaces[j].poly, r, options.quadrature);
        if (m.radius != r) {
          r = m.radius;
          moved = true;
          break;
        }
        SmtTargetRow t;
        t.proximity = m.value;
        t.counting = counting_function(divisors[j], r);
        t.counting_truncated = counting_function(divisors[j], r, report.truncation[j]);
        t.fmt = degrees[j] * row.T - t.counting - t.proximity;
        row.targets.push_back(t);
      }
      if (!moved) break;
    }
    row.radius = r;
    row.lhs = lhs_factor * row.T;
    for (std::size_t j = 0; j < q; ++j) row.rhs += row.targets[j].counting_truncated / degrees[j];
    row.slack = row.rhs - row.lhs;
    report.rows.push_back(std::move(row));
  }

  for (std::size_t j = 0; j < q; ++j) {
    double mean = 0;
    for (const auto& row : report.rows) mean += row.targets[j].fmt;
    mean /= static_cast<double>(report.rows.size());
    double dev = 0;
    for (const auto& row : report.rows) dev = std::max(dev, std::abs(row.targets[j].fmt - mean));
    report.fmt_constant.push_back(mean);
    report.fmt_max_deviation.push_back(dev);
    report.fmt_worst_deviation = std::max(report.fmt_worst_deviation, dev);
  }

  if (report.mode == SmtMode::Hypersurface && curve.is_polynomial()) {
    report.caveats.push_back(
        "polynomial curves are algebraically degenerate; hypersurface-mode slack is a sanity evaluation, not a "
        "test of the theorem");
  } else if (report.mode == SmtMode::Hypersurface) {
    report.caveats.push_back("algebraic nondegeneracy of the curve is assumed, not verified; slack is recorded");
  }
  report.caveats.push_back("the inequality may fail on an exceptional set of radii; slack is reported per radius");
  return report;
}

}  // namespace nochka
