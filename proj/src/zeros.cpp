#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "nochka/errors.hpp"
#include "nochka/nevanlinna.hpp"

namespace nochka {

namespace {

using cd = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void merge_close(std::vector<ZeroEntry>& zeros, double tol) {
  std::vector<ZeroEntry> out;
  for (const auto& z : zeros) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ZeroEntry& e) {
      return std::abs(e.location - z.location) < tol * (1.0 + std::abs(z.location));
    });
    if (it == out.end()) {
      out.push_back(z);
    } else {
      it->multiplicity += z.multiplicity;
    }
  }
  std::sort(out.begin(), out.end(), [](const ZeroEntry& a, const ZeroEntry& b) {
    if (std::abs(a.location) != std::abs(b.location)) return std::abs(a.location) < std::abs(b.location);
    return std::arg(a.location) < std::arg(b.location);
  });
  zeros = std::move(out);
}

std::vector<cd> squarefree_roots(const QIPoly& g) {
  const QIPoly monic = g.monic();
  const int d = monic.degree();
  const auto c = monic.numeric_coeffs();
  std::vector<cd> roots;
  if (d == 1) {
    roots.push_back(-c[0]);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw AssertionFailure("companion eigenvalue computation failed");
    for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
  }
  const QIPoly dg = monic.derivative();
  for (auto& z : roots) {
    for (int it = 0; it < 8; ++it) {
      const cd fz = monic.eval(z);
      const cd dz = dg.eval(z);
      if (dz == 0.0) break;
      const cd step = fz / dz;
      z -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
    }
  }
  return roots;
}

// Phase accumulated by f along a parametrized path. Each accepted step is
// shorter than half of |f/f'| at its sample points, which bounds the phase
// change per step even next to a multiple zero, and the wrapped increments
// must agree with the midpoint.
class PhaseTracker {
 public:
  PhaseTracker(const ExpPolyEvaluator& f, const ExpPolyEvaluator& df) : f_(f), df_(df) {}

  // Returns false when a zero sits on or extremely close to the path.
  bool track(const std::function<cd(double)>& path, double t0, double t1, int pieces, double& phase) const {
    double acc = 0;
    Sample prev = sample(path, t0);
    if (!prev.ok) return false;
    for (int p = 1; p <= pieces; ++p) {
      const double ta = t0 + (t1 - t0) * (p - 1) / pieces;
      const double tb = t0 + (t1 - t0) * p / pieces;
      const Sample next = sample(path, tb);
      if (!next.ok) return false;
      if (!refine(path, ta, tb, prev, next, 0, acc)) return false;
      prev = next;
    }
    phase += acc;
    return true;
  }

 private:
  struct Sample {
    cd z;
    cd log_f;
    double reach;  // |f/f'|
    bool ok;
  };

  static double wrap(double x) { return std::remainder(x, kTwoPi); }

  Sample sample(const std::function<cd(double)>& path, double t) const {
    const cd z = path(t);
    const cd lf = f_.log_value(z);
    if (!std::isfinite(lf.real())) return {z, lf, 0, false};
    const cd ld = df_.log_value(z);
    const double reach = std::isfinite(ld.real()) ? std::exp(lf.real() - ld.real())
                                                  : std::numeric_limits<double>::infinity();
    return {z, lf, reach, true};
  }

  bool refine(const std::function<cd(double)>& path, double ta, double tb, const Sample& a, const Sample& b,
              int depth, double& acc) const {
    const double tm = 0.5 * (ta + tb);
    const Sample m = sample(path, tm);
    if (!m.ok) return false;
    const double d = wrap(b.log_f.imag() - a.log_f.imag());
    const double d1 = wrap(m.log_f.imag() - a.log_f.imag());
    const double d2 = wrap(b.log_f.imag() - m.log_f.imag());
    const double h = std::abs(b.z - a.z);
    const double reach = std::min({a.reach, b.reach, m.reach});
    if (h < 0.5 * reach && std::abs(d1) < 0.6 && std::abs(d2) < 0.6 && std::abs(d1 + d2 - d) < 1e-9) {
      acc += d1 + d2;
      return true;
    }
    if (depth >= 52) return false;
    return refine(path, ta, tm, a, m, depth + 1, acc) && refine(path, tm, tb, m, b, depth + 1, acc);
  }

  const ExpPolyEvaluator& f_;
  const ExpPolyEvaluator& df_;
};

std::optional<int> rounded_winding(double phase) {
  const double w = phase / kTwoPi;
  const double r = std::round(w);
  if (std::abs(w - r) > 0.25) return std::nullopt;
  return static_cast<int>(r);
}

std::optional<int> circle_winding(const PhaseTracker& tracker, double R) {
  double phase = 0;
  const auto path = [R](double t) { return std::polar(R, t); };
  if (!tracker.track(path, 0.0, kTwoPi, 64, phase)) return std::nullopt;
  return rounded_winding(phase);
}

struct Box {
  double x0, x1, y0, y1;
  cd center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
  double size() const { return std::max(x1 - x0, y1 - y0); }
  bool contains(cd z, double margin) const {
    return z.real() >= x0 - margin && z.real() <= x1 + margin && z.imag() >= y0 - margin && z.imag() <= y1 + margin;
  }
};

std::optional<int> box_winding(const PhaseTracker& tracker, const Box& b) {
  const cd corners[4] = {{b.x0, b.y0}, {b.x1, b.y0}, {b.x1, b.y1}, {b.x0, b.y1}};
  double phase = 0;
  for (int e = 0; e < 4; ++e) {
    const cd a = corners[e];
    const cd c = corners[(e + 1) % 4];
    const auto path = [a, c](double t) { return a + (c - a) * t; };
    if (!tracker.track(path, 0.0, 1.0, 8, phase)) return std::nullopt;
  }
  return rounded_winding(phase);
}

class BoxSolver {
 public:
  BoxSolver(const ExpPoly& f, const ZeroOptions& options)
      : f_(f), df_(f.derivative()), tracker_(f_, df_), options_(options) {}

  const PhaseTracker& tracker() const { return tracker_; }

  void solve(const Box& box, int count, std::vector<ZeroEntry>& out, int depth = 0) {
    if (count == 0) return;
    const cd c = box.center();
    if (count == 1) {
      if (auto z = newton(c, 1); z && box.contains(*z, 1e-12 * (1.0 + std::abs(*z)))) {
        out.push_back({*z, 1});
        return;
      }
    }
    if (box.size() < options_.min_box * (1.0 + std::abs(c)) || depth > 200) {
      accept_cluster(box, count, out);
      return;
    }
    static constexpr double kSplits[] = {0.4937, 0.5311, 0.4621, 0.5573, 0.5089};
    for (double s : kSplits) {
      const double xm = box.x0 + s * (box.x1 - box.x0);
      const double ym = box.y0 + (1.0 - s) * (box.y1 - box.y0);
      const Box kids[4] = {{box.x0, xm, box.y0, ym}, {xm, box.x1, box.y0, ym},
                           {box.x0, xm, ym, box.y1}, {xm, box.x1, ym, box.y1}};
      int counts[4];
      bool ok = true;
      int total = 0;
      for (int k = 0; k < 4 && ok; ++k) {
        const auto w = box_winding(tracker_, kids[k]);
        if (!w || *w < 0) {
          ok = false;
        } else {
          counts[k] = *w;
          total += *w;
        }
      }
      if (!ok || total != count) continue;
      for (int k = 0; k < 4; ++k) solve(kids[k], counts[k], out, depth + 1);
      return;
    }
    // Near a multiple zero the phase of f drowns in rounding long before the
    // box reaches min_box; small boxes are accepted as one cluster.
    if (count > 1 && box.size() < kClusterBox * (1.0 + std::abs(c))) {
      accept_cluster(box, count, out);
      return;
    }
    if (count == 1) {
      throw AssertionFailure("argument-principle conservation failed near " + std::to_string(c.real()) + "+" +
                             std::to_string(c.imag()) + "i");
    }
    throw ResourceError("cluster-resolution failure near " + std::to_string(c.real()) + "+" +
                        std::to_string(c.imag()) + "i");
  }

 private:
  static constexpr double kClusterBox = 1e-3;

  void accept_cluster(const Box& box, int count, std::vector<ZeroEntry>& out) const {
    const cd c = box.center();
    auto z = newton(c, count);
    const cd loc = (z && std::abs(*z - c) < box.size()) ? *z : c;
    out.push_back({loc, count});
  }

  // Newton iteration z -= k f/f' computed in the log domain.
  std::optional<cd> newton(cd z, int k) const {
    for (int it = 0; it < 80; ++it) {
      const cd lf = f_.log_value(z);
      if (!std::isfinite(lf.real())) return z;
      const cd ld = df_.log_value(z);
      if (!std::isfinite(ld.real())) return std::nullopt;
      const cd step = static_cast<double>(k) * std::exp(lf - ld);
      z -= step;
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return std::nullopt;
      if (std::abs(step) < 1e-14 * (1.0 + std::abs(z))) return z;
    }
    return std::nullopt;
  }

  ExpPolyEvaluator f_;
  ExpPolyEvaluator df_;
  PhaseTracker tracker_;
  ZeroOptions options_;
};

}  // namespace

int ZeroDivisor::total_multiplicity() const {
  int total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

ZeroDivisor zero_divisor(const QIPoly& p, const ZeroOptions& options) {
  if (p.is_zero()) throw DomainError("zero divisor of the zero function");
  ZeroDivisor div;
  div.radius_of_validity = std::numeric_limits<double>::infinity();
  div.requested_radius = div.radius_of_validity;
  for (const auto& [factor, k] : squarefree_decomposition(p)) {
    for (const cd z : squarefree_roots(factor)) div.entries.push_back({z, k});
  }
  merge_close(div.entries, options.merge_tol);
  if (div.total_multiplicity() != p.degree()) {
    throw AssertionFailure("root multiplicities do not add up to the degree");
  }
  return div;
}

int winding_number(const ExpPoly& f, double R) {
  const ExpPolyEvaluator eval(f);
  const ExpPolyEvaluator deval(f.derivative());
  const auto w = circle_winding(PhaseTracker(eval, deval), R);
  if (!w) throw DomainError("zero of f on or near |z| = " + std::to_string(R));
  return *w;
}

ZeroDivisor zero_divisor(const ExpPoly& f, double R, const ZeroOptions& options) {
  if (f.is_zero()) throw DomainError("zero divisor of the zero function");
  if (f.is_polynomial()) return zero_divisor(f.as_polynomial(), options);
  ZeroDivisor div;
  div.requested_radius = R;
  if (f.is_unit()) {
    div.radius_of_validity = std::numeric_limits<double>::infinity();
    return div;
  }
  if (!(R > 0)) throw DomainError("radius must be positive");
  double radius = R;
  BoxSolver solver(f, options);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt, radius *= 1.0 + 1e-6) {
    const auto wind = circle_winding(solver.tracker(), radius);
    if (!wind) continue;
    // Asymmetric outer box so that symmetric zero sets avoid the edges.
    const Box outer{-1.0173 * radius, 1.0131 * radius, -1.0157 * radius, 1.0119 * radius};
    const auto total = box_winding(solver.tracker(), outer);
    if (!total) throw ResourceError("outer contour passes through a zero");
    std::vector<ZeroEntry> found;
    solver.solve(outer, *total, found);
    merge_close(found, options.merge_tol);
    const bool near_circle = std::any_of(found.begin(), found.end(), [&](const ZeroEntry& e) {
      return std::abs(std::abs(e.location) - radius) < 1e-7 * radius;
    });
    if (near_circle) continue;
    div.entries.clear();
    for (const auto& e : found) {
      if (std::abs(e.location) < radius) div.entries.push_back(e);
    }
    if (div.total_multiplicity() != *wind) {
      throw AssertionFailure("zeros found inside |z|<" + std::to_string(radius) + " (" +
                             std::to_string(div.total_multiplicity()) + ") differ from the winding number " +
                             std::to_string(*wind));
    }
    div.radius_of_validity = radius;
    div.perturbed = attempt > 0;
    div.winding_number = *wind;
    return div;
  }
  throw ResourceError("zeros too close to |z| = " + std::to_string(R) + " after radius perturbation");
}

double counting_function(const ZeroDivisor& divisor, double r, std::optional<int> L) {
  if (r < 1) throw DomainError("counting function needs r >= 1");
  if (r > divisor.radius_of_validity) {
    throw DomainError("r = " + std::to_string(r) + " exceeds the divisor's validity radius " +
                      std::to_string(divisor.radius_of_validity));
  }
  if (L && *L < 1) throw DomainError("truncation level must be positive");
  double total = 0;
  for (const auto& e : divisor.entries) {
    const double a = std::abs(e.location);
    if (a >= r) continue;
    const int nu = L ? std::min(e.multiplicity, *L) : e.multiplicity;
    total += nu * (a < 1 ? std::log(r) : std::log(r / a));
  }
  return total;
}

}  // namespace nochka
