#pragma once

// Combinatorial core: codimension (rank) oracles on subsets of {1..q}, the
// min-ratio filtration, Nochka weights, and the greedy index selection that
// turns a weighted sum over R into a sum over hypersurfaces in general position.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nochka/rational.hpp"
#include "nochka/subset.hpp"

namespace nochka {

/// Codimension function c on subsets of {1..q}, materialized as a 2^q table.
class RankOracle {
 public:
  /// Throws DomainError if q is outside [1, 20], n < 1, N < n, the table has the
  /// wrong size, or some value falls outside [0, n+1].
  RankOracle(int q, int n, int N, std::vector<int> table);

  int q() const { return q_; }
  int n() const { return n_; }
  int N() const { return N_; }
  int operator()(Subset s) const { return table_[s]; }
  const std::vector<int>& table() const { return table_; }

  friend bool operator==(const RankOracle&, const RankOracle&) = default;

 private:
  int q_;
  int n_;
  int N_;
  std::vector<int> table_;
};

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // first counterexample, empty when passed
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  const AxiomCheck* find(std::string_view name) const;
  std::string summary() const;
};

/// Exhaustively checks the seven oracle axioms: empty, monotone,
/// unit-increment, submodular, capped, spanning, exchange.
ValidationReport validate_rank_oracle(const RankOracle& oracle);

/// (c(R2) - c(R1)) / (#R2 - #R1). Requires R1 a proper subset of R2.
Rational rho(const RankOracle& oracle, Subset r1, Subset r2);

struct Filtration {
  std::vector<Subset> subsets;   // R_0 = {} ... R_s
  std::vector<Rational> ratios;  // rho(R_{i-1}, R_i), i = 1..s
  Rational theta;

  int length() const { return static_cast<int>(subsets.size()) - 1; }
};

/// Builds R_0 < R_1 < ... < R_s by repeatedly taking the minimal-ratio
/// candidate; ties go to the largest cardinality, then to the
/// lexicographically smallest sorted index list. The chain is re-checked
/// against the four filtration conditions before returning.
Filtration build_filtration(const RankOracle& oracle);

/// Exhaustive check of the filtration conditions (i)-(iv). Empty string when
/// all hold, otherwise a description of the first violation.
std::string check_filtration(const RankOracle& oracle, const Filtration& filtration);

struct WeightAssignment {
  std::vector<Rational> omega;  // omega[j-1] is the weight of index j
  Rational theta;
  Filtration filtration;
};

WeightAssignment nochka_weights(const RankOracle& oracle);

/// Checks 0 < w(j) <= theta <= 1, the weight-sum identity, the two-sided theta
/// bound, and sum_{j in R} w(j) <= c(R) for every 0 < #R <= N+1.
ValidationReport verify_weight_conditions(const RankOracle& oracle,
                                          const std::vector<Rational>& omega,
                                          const Rational& theta);
inline ValidationReport verify_weight_conditions(const RankOracle& oracle,
                                                 const WeightAssignment& w) {
  return verify_weight_conditions(oracle, w.omega, w.theta);
}

struct GreedySelection {
  std::vector<int> indices;  // j_1, ..., j_{c*}
  Rational weighted_sum;     // sum_{j in R} w(j) E_j
  Rational selected_sum;     // sum_i E_{j_i}
};

/// Picks j_1..j_{c(R)} in R scanning by descending E (ties: ascending index).
/// Verifies c({j_i}) = #{j_i} = c(R) and the weighted inequality exactly.
GreedySelection greedy_select(const RankOracle& oracle, const WeightAssignment& weights,
                              Subset r, const std::vector<Rational>& e);

/// c(R) = rank of {v_j : j in R} over the rationals. The result is not
/// validated; callers decide whether the spanning axiom must hold.
RankOracle linear_matroid_oracle(const std::vector<std::vector<Rational>>& vectors, int N);

/// Text interchange: "q n N" header, then one "i,j,k : c" line per subset
/// ("-" for the empty set). Lines may come in any order; all 2^q are required.
RankOracle read_rank_oracle(std::istream& in);
void write_rank_oracle(std::ostream& out, const RankOracle& oracle);

}  // namespace nochka
