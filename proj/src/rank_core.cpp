#include "nochka/rank_core.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "nochka/errors.hpp"

namespace nochka {

namespace {

// Small exact ratio used inside the exhaustive scans; numerators are at most
// n+1 and denominators at most q, so cross products never overflow.
struct SmallRatio {
  long long num;
  long long den;  // > 0
};

int compare(SmallRatio a, SmallRatio b) {
  const long long lhs = a.num * b.den;
  const long long rhs = b.num * a.den;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

SmallRatio small_rho(const RankOracle& c, Subset r1, Subset r2) {
  return {c(r2) - c(r1), cardinality(r2) - cardinality(r1)};
}

SmallRatio threshold(const RankOracle& c, Subset rs) {
  return {c.n() + 1 - c(rs), 2LL * c.N() - c.n() + 1 - cardinality(rs)};
}

Rational to_rational(SmallRatio r) {
  Rational out(static_cast<long>(r.num), static_cast<long>(r.den));
  out.canonicalize();
  return out;
}

template <typename F>
void for_each_proper_superset(Subset base, int q, F&& fn) {
  const Subset free = full_set(q) & ~base;
  for (Subset add = free; add != 0; add = (add - 1) & free) fn(base | add);
}

std::string pair_witness(const char* a, Subset x, const char* b, Subset y) {
  return std::string(a) + "=" + format_subset(x) + ", " + b + "=" + format_subset(y);
}

}  // namespace

RankOracle::RankOracle(int q, int n, int N, std::vector<int> table)
    : q_(q), n_(n), N_(N), table_(std::move(table)) {
  if (q < 1 || q > kMaxGroundSet) {
    throw DomainError("rank oracle: q=" + std::to_string(q) + " outside [1, 20]");
  }
  if (n < 1) throw DomainError("rank oracle: n must be >= 1");
  if (N < n) throw DomainError("rank oracle: N must be >= n");
  if (table_.size() != (std::size_t{1} << q)) {
    throw DomainError("rank oracle: table must have 2^q entries");
  }
  for (std::size_t s = 0; s < table_.size(); ++s) {
    if (table_[s] < 0 || table_[s] > n + 1) {
      throw DomainError("rank oracle: c" + format_subset(static_cast<Subset>(s)) + "=" +
                        std::to_string(table_[s]) + " outside [0, n+1]");
    }
  }
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": " << (c.passed ? "pass" : "FAIL");
    if (!c.passed) os << " [" << c.witness << "]";
    os << '\n';
  }
  return os.str();
}

ValidationReport validate_rank_oracle(const RankOracle& c) {
  const int q = c.q();
  const int top = c.n() + 1;
  const Subset all = full_set(q);
  AxiomCheck empty{"empty", true, {}};
  AxiomCheck monotone{"monotone", true, {}};
  AxiomCheck unit{"unit-increment", true, {}};
  AxiomCheck submodular{"submodular", true, {}};
  AxiomCheck capped{"capped", true, {}};
  AxiomCheck spanning{"spanning", true, {}};
  AxiomCheck exchange{"exchange", true, {}};

  auto fail = [](AxiomCheck& check, std::string witness) {
    if (check.passed) {
      check.passed = false;
      check.witness = std::move(witness);
    }
  };

  if (c(0) != 0) fail(empty, "c({})=" + std::to_string(c(0)));

  for (Subset k = 0; k <= all; ++k) {
    const int ck = c(k);
    const int size = cardinality(k);
    if (ck > std::min(size, top)) {
      fail(capped, "c" + format_subset(k) + "=" + std::to_string(ck));
    }
    if (size >= c.N() + 1 && ck != top) {
      fail(spanning, "c" + format_subset(k) + "=" + std::to_string(ck) + " < n+1");
    }
    for (int i = 1; i <= q; ++i) {
      if (contains(k, i)) continue;
      const Subset ki = k | singleton(i);
      const int diff = c(ki) - ck;
      if (diff < 0) fail(monotone, pair_witness("K", k, "K'", ki));
      if (diff != 0 && diff != 1) fail(unit, pair_witness("K", k, "K+i", ki));
      // Local form of submodularity; equivalent to the global inequality.
      for (int j = i + 1; j <= q; ++j) {
        if (contains(k, j)) continue;
        const Subset kj = k | singleton(j);
        if (c(ki | kj) + ck > c(ki) + c(kj)) fail(submodular, pair_witness("R1", ki, "R2", kj));
      }
    }
    if (k == all) break;
  }

  // Exchange. For an independent K, let X be the indices whose addition raises
  // c. Every R containing K with c(R) > c(K) must meet X; with monotone c it is
  // enough to look at the largest R avoiding X.
  for (Subset k = 0; k <= all; ++k) {
    if (c(k) == cardinality(k)) {
      Subset raising = 0;
      for (int i = 1; i <= q; ++i) {
        if (!contains(k, i) && c(k | singleton(i)) == c(k) + 1) raising |= singleton(i);
      }
      const Subset r = all & ~raising;
      if (c(r) != c(k)) fail(exchange, pair_witness("K", k, "R", r));
    }
    if (k == all) break;
  }

  return ValidationReport{{empty, monotone, unit, submodular, capped, spanning, exchange}};
}

Rational rho(const RankOracle& c, Subset r1, Subset r2) {
  if (!is_subset(r1, r2) || r1 == r2) {
    throw DomainError("rho: " + format_subset(r1) + " is not a proper subset of " +
                      format_subset(r2));
  }
  return to_rational(small_rho(c, r1, r2));
}

Filtration build_filtration(const RankOracle& c) {
  const auto report = validate_rank_oracle(c);
  if (!report.ok()) throw DomainError("build_filtration: invalid oracle\n" + report.summary());
  if (c.q() < 2 * c.N() - c.n() + 1) {
    throw DomainError("build_filtration: requires q >= 2N-n+1");
  }

  Filtration out;
  out.subsets.push_back(0);
  Subset current = 0;
  while (true) {
    const SmallRatio bound = threshold(c, current);
    const int base = c(current);
    bool found = false;
    Subset best = 0;
    SmallRatio best_ratio{0, 1};
    for_each_proper_superset(current, c.q(), [&](Subset r) {
      const int cr = c(r);
      if (cr <= base || cr >= c.n() + 1) return;
      const SmallRatio ratio = small_rho(c, current, r);
      if (compare(ratio, bound) >= 0) return;
      if (!found) {
        found = true;
        best = r;
        best_ratio = ratio;
        return;
      }
      const int cmp = compare(ratio, best_ratio);
      if (cmp > 0) return;
      if (cmp == 0) {
        const int size = cardinality(r);
        const int best_size = cardinality(best);
        if (size < best_size) return;
        if (size == best_size && !index_list_less(r, best)) return;
      }
      best = r;
      best_ratio = ratio;
    });
    if (!found) break;
    out.subsets.push_back(best);
    out.ratios.push_back(to_rational(best_ratio));
    current = best;
  }
  out.theta = to_rational(threshold(c, current));

  if (auto problem = check_filtration(c, out); !problem.empty()) {
    throw AssertionFailure("build_filtration: " + problem);
  }
  return out;
}

std::string check_filtration(const RankOracle& c, const Filtration& f) {
  if (f.subsets.empty() || f.subsets.front() != 0) return "chain must start at the empty set";
  const int s = f.length();
  if (static_cast<int>(f.ratios.size()) != s) return "ratio count does not match chain length";
  const Subset rs = f.subsets.back();
  if (c(rs) >= c.n() + 1) return "(i) c(R_s) = n+1";
  for (int i = 1; i <= s; ++i) {
    const Subset prev = f.subsets[i - 1];
    const Subset cur = f.subsets[i];
    if (!is_subset(prev, cur) || prev == cur) return "chain is not strictly increasing";
    if (rho(c, prev, cur) != f.ratios[i - 1]) return "stored ratio differs from rho";
  }
  const Rational bound = to_rational(threshold(c, rs));
  if (f.theta != bound) return "theta differs from (n+1-c(R_s))/(2N-n+1-#R_s)";
  for (int i = 0; i < s; ++i) {
    if (sgn(f.ratios[i]) <= 0) return "(ii) nonpositive ratio";
    if (i > 0 && f.ratios[i] <= f.ratios[i - 1]) return "(ii) ratios not strictly increasing";
  }
  if (s > 0 && f.ratios.back() >= bound) return "(ii) last ratio not below theta";

  std::string problem;
  for (int i = 1; i <= s && problem.empty(); ++i) {
    const Subset prev = f.subsets[i - 1];
    const Subset cur = f.subsets[i];
    const SmallRatio chosen = small_rho(c, prev, cur);
    for_each_proper_superset(prev, c.q(), [&](Subset r) {
      if (!problem.empty()) return;
      if (c(r) <= c(prev) || c(r) >= c.n() + 1) return;
      const int cmp = compare(chosen, small_rho(c, prev, r));
      if (cmp > 0 || (cmp == 0 && cardinality(r) > cardinality(cur))) {
        problem = "(iii) violated at step " + std::to_string(i) + " by R=" + format_subset(r);
      }
    });
  }
  if (!problem.empty()) return problem;
  const SmallRatio last = threshold(c, rs);
  for_each_proper_superset(rs, c.q(), [&](Subset r) {
    if (!problem.empty()) return;
    if (c(r) <= c(rs) || c(r) >= c.n() + 1) return;
    if (compare(small_rho(c, rs, r), last) < 0) problem = "(iv) violated by R=" + format_subset(r);
  });
  return problem;
}

WeightAssignment nochka_weights(const RankOracle& c) {
  WeightAssignment out;
  out.filtration = build_filtration(c);
  out.omega.assign(c.q(), Rational(1));
  if (c.N() == c.n()) {
    out.theta = 1;
  } else {
    out.theta = out.filtration.theta;
    const auto& chain = out.filtration.subsets;
    for (int j = 1; j <= c.q(); ++j) {
      out.omega[j - 1] = out.theta;
      for (std::size_t i = 1; i < chain.size(); ++i) {
        if (contains(chain[i], j)) {
          out.omega[j - 1] = out.filtration.ratios[i - 1];
          break;
        }
      }
    }
  }
  const auto report = verify_weight_conditions(c, out.omega, out.theta);
  if (!report.ok()) throw AssertionFailure("nochka_weights: postcondition failed\n" + report.summary());
  return out;
}

ValidationReport verify_weight_conditions(const RankOracle& c, const std::vector<Rational>& omega,
                                          const Rational& theta) {
  const int q = c.q();
  const int n = c.n();
  const int N = c.N();
  AxiomCheck bounds{"(i) 0<w<=theta<=1", true, {}};
  AxiomCheck sum{"(ii) weight sum", true, {}};
  AxiomCheck theta_range{"(iii) theta range", true, {}};
  AxiomCheck subsets{"(iv) subset sums", true, {}};
  if (static_cast<int>(omega.size()) != q) {
    bounds.passed = false;
    bounds.witness = "expected " + std::to_string(q) + " weights";
    return ValidationReport{{bounds, sum, theta_range, subsets}};
  }

  if (theta > 1) {
    bounds.passed = false;
    bounds.witness = "theta=" + to_string(theta);
  }
  for (int j = 0; j < q && bounds.passed; ++j) {
    if (sgn(omega[j]) <= 0 || omega[j] > theta) {
      bounds.passed = false;
      bounds.witness = "w(" + std::to_string(j + 1) + ")=" + to_string(omega[j]);
    }
  }

  const Rational total = std::accumulate(omega.begin(), omega.end(), Rational(0));
  const Rational expected = theta * (q - 2 * N + n - 1) + (n + 1);
  if (total != expected) {
    sum.passed = false;
    sum.witness = "sum=" + to_string(total) + ", expected " + to_string(expected);
  }

  Rational lower(n + 1, 2 * N - n + 1);
  Rational upper(n + 1, N + 1);
  lower.canonicalize();
  upper.canonicalize();
  if (theta < lower || theta > upper) {
    theta_range.passed = false;
    theta_range.witness = "theta=" + to_string(theta);
  }

  std::vector<Rational> partial(std::size_t{1} << q);
  for (Subset r = 1; r <= full_set(q); ++r) {
    const int low = std::countr_zero(r);
    partial[r] = partial[r & (r - 1)] + omega[low];
    if (cardinality(r) <= N + 1 && partial[r] > c(r)) {
      subsets.passed = false;
      subsets.witness = "R=" + format_subset(r) + ": " + to_string(partial[r]) + " > c=" +
                        std::to_string(c(r));
      break;
    }
    if (r == full_set(q)) break;
  }
  return ValidationReport{{bounds, sum, theta_range, subsets}};
}

GreedySelection greedy_select(const RankOracle& c, const WeightAssignment& weights, Subset r,
                              const std::vector<Rational>& e) {
  const int q = c.q();
  if (r == 0) throw DomainError("greedy_select: R must be nonempty");
  if (!is_subset(r, full_set(q))) throw DomainError("greedy_select: R not inside {1..q}");
  if (cardinality(r) > c.N() + 1) throw DomainError("greedy_select: #R > N+1");
  if (static_cast<int>(e.size()) != q) throw DomainError("greedy_select: E must have q entries");
  for (const auto& v : e) {
    if (sgn(v) < 0) throw DomainError("greedy_select: E must be nonnegative");
  }
  if (!verify_weight_conditions(c, weights).ok()) {
    throw DomainError("greedy_select: weights do not satisfy the Nochka conditions");
  }

  std::vector<int> order = indices_of(r);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return e[a - 1] > e[b - 1]; });

  const int target = c(r);
  GreedySelection out;
  Subset chosen = 0;
  Subset covered = 0;  // K_i
  for (int i = 1; i <= target; ++i) {
    auto next = std::find_if(order.begin(), order.end(), [&](int t) { return !contains(covered, t); });
    if (next == order.end()) throw AssertionFailure("greedy_select: R exhausted before c(R) picks");
    chosen |= singleton(*next);
    out.indices.push_back(*next);
    if (c(chosen) != i) throw AssertionFailure("greedy_select: picked indices not in general position");
    covered = 0;
    for (int k : order) {
      if (c(chosen | singleton(k)) == i) covered |= singleton(k);
    }
  }

  for (int j : indices_of(r)) out.weighted_sum += weights.omega[j - 1] * e[j - 1];
  for (int j : out.indices) out.selected_sum += e[j - 1];
  if (c(chosen) != cardinality(chosen) || c(chosen) != target) {
    throw AssertionFailure("greedy_select: selection rank mismatch");
  }
  if (out.weighted_sum > out.selected_sum) {
    throw AssertionFailure("greedy_select: weighted inequality fails");
  }
  return out;
}

namespace {

// Reduces v against an echelon basis (pivot columns recorded). Returns true and
// appends the reduced vector when v is independent.
bool insert_into_echelon(std::vector<std::vector<Rational>>& basis, std::vector<int>& pivots,
                         std::vector<Rational> v) {
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const int p = pivots[b];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p] / basis[b][p];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= factor * basis[b][k];
  }
  const auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (it == v.end()) return false;
  pivots.push_back(static_cast<int>(it - v.begin()));
  basis.push_back(std::move(v));
  return true;
}

void fill_ranks(const std::vector<std::vector<Rational>>& vectors, int next, Subset current,
                std::vector<std::vector<Rational>>& basis, std::vector<int>& pivots,
                std::vector<int>& table) {
  if (next == static_cast<int>(vectors.size())) {
    table[current] = static_cast<int>(basis.size());
    return;
  }
  fill_ranks(vectors, next + 1, current, basis, pivots, table);
  const bool grew = insert_into_echelon(basis, pivots, vectors[next]);
  fill_ranks(vectors, next + 1, current | singleton(next + 1), basis, pivots, table);
  if (grew) {
    basis.pop_back();
    pivots.pop_back();
  }
}

}  // namespace

RankOracle linear_matroid_oracle(const std::vector<std::vector<Rational>>& vectors, int N) {
  if (vectors.empty() || vectors.size() > kMaxGroundSet) {
    throw DomainError("linear_matroid_oracle: need 1..20 vectors");
  }
  const std::size_t dim = vectors.front().size();
  if (dim < 2) throw DomainError("linear_matroid_oracle: vectors must have length n+1 >= 2");
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DomainError("linear_matroid_oracle: dimension mismatch");
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; })) {
      throw DomainError("linear_matroid_oracle: zero vector");
    }
  }
  const int q = static_cast<int>(vectors.size());
  std::vector<int> table(std::size_t{1} << q, 0);
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivots;
  fill_ranks(vectors, 0, 0, basis, pivots, table);
  return RankOracle(q, static_cast<int>(dim) - 1, N, std::move(table));
}

RankOracle read_rank_oracle(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int q = 0, n = 0, N = 0;
  bool have_header = false;
  std::vector<int> table;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!have_header) {
      std::istringstream hs(line);
      if (!(hs >> q >> n >> N)) throw ParseError("rank oracle: expected header 'q n N'", line_no);
      if (q < 1 || q > kMaxGroundSet) throw ParseError("rank oracle: q outside [1, 20]", line_no);
      table.assign(std::size_t{1} << q, -1);
      seen.assign(table.size(), false);
      have_header = true;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("rank oracle: expected 'subset : value'", line_no);
    std::string lhs = line.substr(0, colon);
    std::replace(lhs.begin(), lhs.end(), ',', ' ');
    std::istringstream ls(lhs);
    Subset s = 0;
    std::string token;
    bool empty_marker = false;
    while (ls >> token) {
      if (token == "-") {
        empty_marker = true;
        continue;
      }
      int idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw ParseError("rank oracle: bad index '" + token + "'", line_no);
      }
      if (idx < 1 || idx > q) throw ParseError("rank oracle: index out of range", line_no);
      s |= singleton(idx);
    }
    if (empty_marker && s != 0) throw ParseError("rank oracle: '-' mixed with indices", line_no);
    if (!empty_marker && s == 0) throw ParseError("rank oracle: empty subset must be written '-'", line_no);
    std::istringstream rs(line.substr(colon + 1));
    int value = 0;
    if (!(rs >> value)) throw ParseError("rank oracle: missing value", line_no);
    if (seen[s]) throw ParseError("rank oracle: duplicate subset " + format_subset(s), line_no);
    seen[s] = true;
    table[s] = value;
  }
  if (!have_header) throw ParseError("rank oracle: missing header", line_no);
  for (std::size_t s = 0; s < seen.size(); ++s) {
    if (!seen[s]) {
      throw ParseError("rank oracle: missing subset " + format_subset(static_cast<Subset>(s)), line_no);
    }
  }
  return RankOracle(q, n, N, std::move(table));
}

void write_rank_oracle(std::ostream& out, const RankOracle& c) {
  out << c.q() << ' ' << c.n() << ' ' << c.N() << '\n';
  for (Subset s = 0; s <= full_set(c.q()); ++s) {
    if (s == 0) {
      out << '-';
    } else {
      bool first = true;
      for (int i : indices_of(s)) {
        if (!first) out << ',';
        out << i;
        first = false;
      }
    }
    out << " : " << c(s) << '\n';
    if (s == full_set(c.q())) break;
  }
}

}  // namespace nochka
