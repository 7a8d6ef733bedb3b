#pragma once

// Shared generators and independent brute-force oracles for the test suites.
// Nothing here calls back into the code paths it is used to check.

#include <algorithm>
#include <random>
#include <vector>

#include "nochka/rank_core.hpp"

namespace nochka::testing {

inline std::vector<std::vector<Rational>> fixture7_vectors() {
  auto v = [](long a, long b, long c) { return std::vector<Rational>{a, b, c}; };
  return {v(1, 0, 0), v(2, 0, 0), v(3, 0, 0), v(0, 1, 0), v(0, 0, 1), v(1, 1, 1), v(1, 2, 3)};
}

inline RankOracle fixture7_oracle() { return linear_matroid_oracle(fixture7_vectors(), 4); }

inline RankOracle uniform_oracle(int q, int n, int N) {
  std::vector<int> table(std::size_t{1} << q);
  for (Subset s = 0; s < table.size(); ++s) table[s] = std::min(cardinality(s), n + 1);
  return RankOracle(q, n, N, std::move(table));
}

/// Rank by plain Gaussian elimination on a copy; used as an independent check of
/// the DFS-based table builder.
inline int brute_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || sgn(rows[r][col]) == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

struct RandomMatroid {
  std::vector<std::vector<Rational>> vectors;
  RankOracle oracle;
};

/// Random linear-matroid oracle passing validation with q <= q_max,
/// 1 <= n <= n_max, n <= N <= N_max and q >= 2N-n+1. Vectors are built from
/// repeated directions and sums of earlier vectors so that nontrivial
/// filtrations show up regularly.
template <typename Rng>
RandomMatroid random_valid_matroid(Rng& rng, int q_max = 10, int n_max = 4, int N_max = 6) {
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    const int n = std::uniform_int_distribution<int>(1, n_max)(rng);
    const int q = std::uniform_int_distribution<int>(n + 1, q_max)(rng);
    std::vector<std::vector<Rational>> vs;
    while (static_cast<int>(vs.size()) < q) {
      std::vector<Rational> v(n + 1);
      const double u = coin(rng);
      if (!vs.empty() && u < 0.3) {
        const auto& base = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
        long k = 0;
        while (k == 0) k = small(rng);
        for (int i = 0; i <= n; ++i) v[i] = base[i] * k;
      } else if (vs.size() >= 2 && u < 0.5) {
        std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
        const auto& a = vs[pick(rng)];
        const auto& b = vs[pick(rng)];
        const long ka = small(rng), kb = small(rng);
        for (int i = 0; i <= n; ++i) v[i] = a[i] * ka + b[i] * kb;
      } else {
        for (auto& x : v) x = small(rng);
      }
      if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; })) {
        vs.push_back(std::move(v));
      }
    }
    const RankOracle probe = linear_matroid_oracle(vs, n);
    int largest_deficient = 0;
    for (Subset s = 0; s < probe.table().size(); ++s) {
      if (probe(s) < n + 1) largest_deficient = std::max(largest_deficient, cardinality(s));
    }
    if (largest_deficient == q) continue;  // does not span
    const int N_min = std::max(n, largest_deficient);
    const int N_hi = std::min(N_max, (q + n - 1) / 2);
    if (N_min > N_hi) continue;
    const int N = std::uniform_int_distribution<int>(N_min, N_hi)(rng);
    return RandomMatroid{vs, linear_matroid_oracle(vs, N)};
  }
}

template <typename Rng>
Rational random_nonnegative_rational(Rng& rng, long max_num = 20, long max_den = 7) {
  Rational r(std::uniform_int_distribution<long>(0, max_num)(rng),
             std::uniform_int_distribution<long>(1, max_den)(rng));
  r.canonicalize();
  return r;
}

/// Straight transcription of the filtration loop over all subsets, using
/// Rational arithmetic and an explicit candidate list.
inline Filtration naive_filtration(const RankOracle& c) {
  Filtration f;
  f.subsets.push_back(0);
  const int q = c.q(), n = c.n(), N = c.N();
  auto bound = [&](Subset rs) {
    Rational t(n + 1 - c(rs), 2 * N - n + 1 - cardinality(rs));
    t.canonicalize();
    return t;
  };
  while (true) {
    const Subset rs = f.subsets.back();
    struct Cand {
      Rational ratio;
      Subset set;
    };
    std::vector<Cand> cands;
    for (Subset r = 0; r < (Subset{1} << q); ++r) {
      if (!is_subset(rs, r) || r == rs) continue;
      if (!(c(rs) < c(r) && c(r) < n + 1)) continue;
      Rational ratio(c(r) - c(rs), cardinality(r) - cardinality(rs));
      ratio.canonicalize();
      if (ratio < bound(rs)) cands.push_back({ratio, r});
    }
    if (cands.empty()) break;
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.ratio != b.ratio) return a.ratio < b.ratio;
      if (cardinality(a.set) != cardinality(b.set)) return cardinality(a.set) > cardinality(b.set);
      return indices_of(a.set) < indices_of(b.set);
    });
    f.subsets.push_back(cands.front().set);
    f.ratios.push_back(cands.front().ratio);
  }
  f.theta = bound(f.subsets.back());
  return f;
}

/// Global submodularity over all pairs (4^q work; q <= 10 in tests).
inline bool naive_submodular(const RankOracle& c) {
  const Subset top = Subset{1} << c.q();
  for (Subset a = 0; a < top; ++a) {
    for (Subset b = 0; b < top; ++b) {
      if (c(a | b) + c(a & b) > c(a) + c(b)) return false;
    }
  }
  return true;
}

/// Exchange property in its original form: for every K <= R with c(K) = #K,
/// some K <= K' <= R has c(K') = #K' = c(R). 3^q work.
inline bool naive_exchange(const RankOracle& c) {
  const Subset top = Subset{1} << c.q();
  for (Subset r = 0; r < top; ++r) {
    for (Subset k = r;; k = (k - 1) & r) {
      if (c(k) == cardinality(k)) {
        bool found = false;
        const Subset free = r & ~k;
        for (Subset add = free;; add = (add - 1) & free) {
          const Subset kp = k | add;
          if (c(kp) == cardinality(kp) && c(kp) == c(r)) {
            found = true;
            break;
          }
          if (add == 0) break;
        }
        if (!found) return false;
      }
      if (k == 0) break;
    }
  }
  return true;
}

}  // namespace nochka::testing
