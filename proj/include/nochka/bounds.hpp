#pragma once

// Explicit constants: common degree d, m_0, q_m and the truncation levels L_j
// with their a-priori bounds.

#include <optional>
#include <string>
#include <vector>

#include "nochka/rational.hpp"

namespace nochka {

struct ParamSet {
  int n = 1;
  int degV = 1;
  int N = 1;
  int q = 1;
  std::vector<int> degrees;  // d_1..d_q
  Rational epsilon{1};
};

/// Throws DomainError unless N >= n >= 1, degV >= 1, q >= 2N-n+1, q degrees
/// all positive and 0 < epsilon <= 1.
void check_params(const ParamSet& p);

long lcm_degree(const std::vector<int>& degrees);

/// floor(4 d^{n+1} q (2n+1)(2N-n+1) degV / epsilon) + 1. Asserts m_0 > d^n degV.
BigInt m_zero(const ParamSet& p);
BigInt m_zero(int n, int degV, int N, long d, int q, const Rational& epsilon);

/// binom(q+m-1, m).
BigInt q_m(long q, long m);

struct ThresholdCheck {
  long m = 0;
  long H = 0;
  Rational theta;
  std::string theta_source;
  Rational target;        // theta * epsilon / 4
  Rational first_lhs;     // (2n+1)(n+1) d q Delta / m
  Rational second_lhs;    // (n+1) d / H
  bool first = false;
  bool second = false;
};

struct BoundsResult {
  long d = 1;
  BigInt delta;          // d^n degV
  BigInt m0;
  double m0_log10 = 0;
  BigInt qm0;
  double qm0_log10 = 0;
  std::vector<BigInt> Lj_bounds;
  std::optional<std::vector<BigInt>> Lj_exact;
  std::optional<ThresholdCheck> threshold;
};

struct HilbertValue {
  long m = 0;
  long H = 0;
};

/// L_j bounds floor(d_j (q_{m_0} - 1)/d) + 1; with H = H_Y(m), also the exact
/// L_j = floor(d_j (H - 1)/d) + 1 and the two threshold inequalities on (m, H).
/// theta defaults to the lower bound (n+1)/(2N-n+1).
BoundsResult truncation_levels(const ParamSet& p, std::optional<HilbertValue> hilbert = std::nullopt,
                               std::optional<Rational> theta = std::nullopt);

}  // namespace nochka
