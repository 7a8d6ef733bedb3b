#include "nochka/bounds.hpp"

#include <numeric>

#include "nochka/errors.hpp"

namespace nochka {

namespace {

BigInt power(long base, int e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

BigInt floor_of(const Rational& x) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

}  // namespace

void check_params(const ParamSet& p) {
  if (p.n < 1) throw DomainError("n must be at least 1");
  if (p.N < p.n) throw DomainError("N must be at least n");
  if (p.degV < 1) throw DomainError("degV must be positive");
  if (p.q < 2 * p.N - p.n + 1) throw DomainError("q must be at least 2N-n+1");
  if (static_cast<int>(p.degrees.size()) != p.q) throw DomainError("need exactly q degrees");
  for (int d : p.degrees) {
    if (d < 1) throw DomainError("degrees must be positive");
  }
  if (sgn(p.epsilon) <= 0 || p.epsilon > 1) throw DomainError("epsilon must lie in (0, 1]");
}

long lcm_degree(const std::vector<int>& degrees) {
  long d = 1;
  for (int x : degrees) d = std::lcm(d, static_cast<long>(x));
  return d;
}

BigInt m_zero(int n, int degV, int N, long d, int q, const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw DomainError("epsilon must be positive");
  const BigInt product = 4 * power(d, n + 1) * q * (2 * n + 1) * (2 * N - n + 1) * degV;
  const BigInt m0 = floor_of(Rational(product) / epsilon) + 1;
  if (m0 <= power(d, n) * degV) throw AssertionFailure("m_0 does not exceed d^n deg V");
  return m0;
}

BigInt m_zero(const ParamSet& p) {
  check_params(p);
  return m_zero(p.n, p.degV, p.N, lcm_degree(p.degrees), p.q, p.epsilon);
}

BigInt q_m(long q, long m) {
  if (q < 1 || m < 0) throw DomainError("q_m needs q >= 1 and m >= 0");
  return binomial(static_cast<unsigned long>(q + m - 1), static_cast<unsigned long>(m));
}

BoundsResult truncation_levels(const ParamSet& p, std::optional<HilbertValue> hilbert, std::optional<Rational> theta) {
  check_params(p);
  BoundsResult r;
  r.d = lcm_degree(p.degrees);
  r.delta = power(r.d, p.n) * p.degV;
  r.m0 = m_zero(p);
  r.m0_log10 = log10_big(r.m0);
  if (!r.m0.fits_slong_p()) throw ResourceError("m_0 too large for q_m evaluation");
  r.qm0 = q_m(p.q, r.m0.get_si());
  r.qm0_log10 = log10_big(r.qm0);
  for (int dj : p.degrees) r.Lj_bounds.push_back(floor_of(Rational(BigInt(dj) * (r.qm0 - 1), BigInt(r.d))) + 1);

  if (hilbert) {
    if (hilbert->m < 1 || hilbert->H < 1) throw DomainError("H and m must be positive");
    std::vector<BigInt> exact;
    for (int dj : p.degrees) exact.push_back(floor_of(Rational(BigInt(dj) * (hilbert->H - 1), BigInt(r.d))) + 1);
    r.Lj_exact = std::move(exact);

    ThresholdCheck t;
    t.m = hilbert->m;
    t.H = hilbert->H;
    if (theta) {
      t.theta = *theta;
      t.theta_source = "supplied";
    } else {
      t.theta = Rational(p.n + 1, 2 * p.N - p.n + 1);
      t.theta.canonicalize();
      t.theta_source = "lower bound (n+1)/(2N-n+1)";
    }
    t.target = t.theta * p.epsilon / 4;
    t.first_lhs = Rational(BigInt((2 * p.n + 1) * (p.n + 1)) * r.d * p.q * r.delta, BigInt(t.m));
    t.first_lhs.canonicalize();
    t.second_lhs = Rational(BigInt(p.n + 1) * r.d, BigInt(t.H));
    t.second_lhs.canonicalize();
    t.first = t.first_lhs < t.target;
    t.second = t.second_lhs < t.target;
    r.threshold = t;
  }
  return r;
}

}  // namespace nochka
