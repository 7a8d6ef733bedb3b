#pragma once

// Nevanlinna functionals of explicit holomorphic curves: circle quadrature,
// zero divisors, truncated counting functions, characteristic and proximity
// functions, Jensen consistency, Wronskians, Cartan-Ru and the lifted curve.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nochka/expoly.hpp"
#include "nochka/geometry.hpp"
#include "nochka/univariate.hpp"

namespace nochka {

struct QuadratureOptions {
  double tol = 1e-9;  // stop when successive trapezoid values differ by less
  int min_k = 8;      // first pass uses 2^min_k points
  int max_k = 20;
};

struct QuadratureResult {
  double value = 0;
  double error = 0;    // last successive difference
  int k = 0;           // 2^k points in the final pass
  double radius = 0;   // radius actually used
  bool perturbed = false;
};

/// Mean of g over |z| = r by the doubling trapezoid rule. When a sample is
/// not finite (a zero of the integrand's argument on the circle) the radius is
/// multiplied by 1+1e-6 and the integral restarted. Throws ResourceError when
/// 2^max_k points do not reach the tolerance.
template <typename G>
QuadratureResult circle_mean(G&& g, double r, const QuadratureOptions& options = {});

struct ZeroEntry {
  std::complex<double> location;
  int multiplicity = 1;
};

struct ZeroDivisor {
  std::vector<ZeroEntry> entries;
  /// All zeros with |z| below this radius are listed (infinity for polynomials).
  double radius_of_validity = 0;
  double requested_radius = 0;
  bool perturbed = false;
  /// Argument-principle count on the validity circle (exponential case).
  std::optional<int> winding_number;

  int total_multiplicity() const;
};

struct ZeroOptions {
  double merge_tol = 1e-8;     // relative distance below which roots merge
  double min_box = 1e-7;       // relative box size at which clusters are accepted
  int max_attempts = 8;        // radius perturbations before giving up
};

/// Roots with exact multiplicities (square-free decomposition, companion
/// eigenvalues, Newton polishing). Throws DomainError for the zero polynomial.
ZeroDivisor zero_divisor(const QIPoly& p, const ZeroOptions& options = {});
/// Zeros in |z| < R. Polynomials use the exact path; other functions use
/// argument-principle box subdivision and Newton refinement.
ZeroDivisor zero_divisor(const ExpPoly& f, double R, const ZeroOptions& options = {});
/// Winding number of f around 0 along |z| = R (zeros of f inside).
int winding_number(const ExpPoly& f, double R);

/// N^{[L]}(r) = sum_{|z|<1} min(nu, L) log r + sum_{1<=|z|<r} min(nu, L) log(r/|z|).
/// L = nullopt means no truncation. Requires 1 <= r <= radius_of_validity.
double counting_function(const ZeroDivisor& divisor, double r, std::optional<int> L = std::nullopt);

/// T_f(r): circle mean of log max_i |f_i|. Requires r >= 1.
QuadratureResult characteristic(const Curve& curve, double r, const QuadratureOptions& options = {});

/// Coefficient norm used in proximity functions: max |coefficient|.
double coefficient_norm(const Polynomial& q);

/// m_f(r, D): circle mean of log(||f||^d ||Q|| / |Q(f)|). Throws DomainError
/// when Q(f) vanishes identically.
QuadratureResult proximity(const Curve& curve, const Polynomial& q, double r,
                           const QuadratureOptions& options = {});

struct ConstancyReport {
  std::vector<double> radii;       // radii actually used
  std::vector<double> differences; // circle mean of log|phi| minus N_phi
  double constant = 0;             // mean of the differences
  double max_deviation = 0;
  std::optional<double> predicted; // closed form when available
};

/// Jensen: circle mean of log|phi(r e^{it})| - N_phi(r) is independent of r.
/// Polynomials predict log|lead| + sum_{|a|>=1} log|a|; other functions with
/// phi(0) != 0 predict log|phi(0)| + sum_{|a|<1} log(1/|a|).
ConstancyReport jensen_check(const ExpPoly& phi, const std::vector<double>& radii,
                             const QuadratureOptions& quad = {}, const ZeroOptions& zeros = {});

/// det(f_j^{(i)}) by fraction-free elimination.
QIPoly wronskian(const std::vector<QIPoly>& functions);

struct WronskianDivisorEntry {
  QIPoly factor;           // square-free, all of its roots behave alike
  std::vector<int> orders; // ord of each f_i along the factor
  int ord_product = 0;
  int ord_wronskian = 0;
  int lhs = 0;             // ord_product - ord_wronskian
  int rhs = 0;             // sum_i min(ord f_i, M)
};

struct WronskianDivisorReport {
  QIPoly wronskian;
  std::vector<WronskianDivisorEntry> entries;
  bool passed = true;
  bool equality = false;   // some entry has lhs == rhs > 0
  std::string witness;
};

/// Exact check of ord(f_0...f_M) - ord(W) <= sum min(ord f_i, M) at every zero
/// of the product. Throws DomainError when the f_i share a factor or W = 0.
WronskianDivisorReport wronskian_divisor_check(const std::vector<QIPoly>& coords);

struct CartanRow {
  double requested_radius = 0;
  double radius = 0;
  double integral = 0;      // circle mean of max_K sum_{j in K} E_j
  double wronskian_count = 0;
  double T = 0;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
};

struct CartanReport {
  std::vector<std::vector<int>> family;  // (n+1)-subsets in general position, 1-based
  QIPoly wronskian;
  std::vector<CartanRow> rows;
  std::string caveat;
};

/// Both sides of the Cartan-Ru inequality for a polynomial curve in P^n and
/// hyperplanes given by coefficient vectors of length n+1.
CartanReport cartan_ru_check(const Curve& curve, const std::vector<std::vector<Rational>>& hyperplanes,
                             const Rational& epsilon, const std::vector<double>& radii,
                             const QuadratureOptions& options = {});

struct LiftResult {
  int m = 0;
  long q_m = 0;
  std::vector<std::vector<int>> exponents;
  std::vector<ExpPoly> F;
  long rank = 0;
  long relation_dim = 0;
  bool degenerate = false;  // all F_i proportional
};

/// F_i = prod_j G_j(f)^{I_ij} with G_j the degree-equalized targets, and the
/// dimension of linear relations among them (exact).
LiftResult lift_curve(const Curve& curve, const Arrangement& arr, int m, long max_qm = 5000);

/// Throws DomainError unless the curve lies in V (generators vanish on f).
void check_curve_in_variety(const Curve& curve, const Arrangement& arr);

/// min and max over sampled points on |z| = r of d log||f|| - max_{j in J} log|G_j(f)|.
std::pair<double, double> max_term_gap(const Curve& curve, const Arrangement& arr, const std::vector<int>& J,
                                       double r, int samples = 4096);

enum class SmtMode { Hyperplane, Hypersurface };

struct SmtOptions {
  Rational epsilon{1};
  /// One level per target, or a single level for all; empty picks the default
  /// (n in hyperplane mode, untruncated otherwise). nullopt entries mean no
  /// truncation.
  std::vector<std::optional<int>> truncation;
  std::vector<double> radii;
  QuadratureOptions quadrature;
  ZeroOptions zeros;
};

struct SmtTargetRow {
  double counting_truncated = 0;
  double counting = 0;
  double proximity = 0;
  double fmt = 0;  // d_j T - N - m
};

struct SmtRadiusRow {
  double requested_radius = 0;
  double radius = 0;
  double T = 0;
  std::vector<SmtTargetRow> targets;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
};

struct SmtReport {
  SmtMode mode = SmtMode::Hyperplane;
  int n = 0;
  int N = 0;
  int q = 0;
  Rational epsilon;
  int coefficient = 0;  // q - 2N + n - 1
  std::vector<std::optional<int>> truncation;
  std::string truncation_source;
  std::vector<SmtRadiusRow> rows;
  std::vector<double> fmt_constant;       // per target, mean over radii
  std::vector<double> fmt_max_deviation;  // per target
  double fmt_worst_deviation = 0;
  bool position_condition_i = false;
  bool position_condition_ii_proxy = false;
  std::vector<std::string> caveats;
};

/// Evaluates (q-2N+n-1-eps) T_f(r) against sum_j (1/d_j) N^{[L_j]}(r, D_j)
/// (hyperplane mode: all d_j = 1 and V = P^n) with the First Main Theorem
/// constancy check. Throws DomainError when condition (i) fails, a target
/// vanishes on f, or a radius is below 1.
SmtReport smt_report(const Curve& curve, const Arrangement& arr, const SmtOptions& options);

}  // namespace nochka

#include "nochka/detail/circle_mean.hpp"
