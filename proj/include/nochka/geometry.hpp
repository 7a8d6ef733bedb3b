#pragma once

// Hypersurface arrangements on a projective variety V: the induced codimension
// oracle, N-subgeneral position, and Hilbert functions and weights of the image
// Y of x -> (Q_1(x) : ... : Q_q(x)).

#include <iosfwd>
#include <string>
#include <vector>

#include "nochka/poly.hpp"
#include "nochka/rank_core.hpp"

namespace nochka {

struct Hypersurface {
  std::string name;
  Polynomial poly;
  int degree() const { return poly.degree(); }
};

struct Arrangement {
  int M = 0;
  int n = 0;
  int degV = 1;
  int N = 0;
  std::vector<std::string> vars;
  std::vector<Polynomial> variety;  // empty: V is all of P^M
  std::vector<Hypersurface> hypersurfaces;
  GroebnerOptions groebner;

  int q() const { return static_cast<int>(hypersurfaces.size()); }
  std::vector<int> degrees() const;
  /// Least common multiple of the degrees.
  long common_degree() const;
  Ideal variety_ideal() const;
  /// Q_j^{d/d_j}, all of the common degree d.
  std::vector<Polynomial> equalized() const;
};

/// Sections "[space] M=.. n=.. degV=.. N=..", "[vars] x0 .. xM", "[variety]"
/// (one polynomial per line) and "[hypersurfaces]" ("name : polynomial").
/// '#' starts a comment. Throws ParseError with the line number.
Arrangement read_arrangement(std::istream& in);
void write_arrangement(std::ostream& out, const Arrangement& arr);

/// Throws DomainError unless every Q_j is nonzero, homogeneous and not
/// vanishing on V, and V has the declared dimension.
void check_arrangement(const Arrangement& arr);

/// c(R) = n - dim(V cap D_R), or n+1 when the intersection is empty.
RankOracle codim_oracle(const Arrangement& arr);

struct PositionReport {
  bool condition_i = false;
  std::string condition_i_witness;  // an (N+1)-subset meeting V
  bool condition_ii = false;
  /// Condition (ii) is only checked through the oracle axioms; this label is
  /// always "proxy".
  std::string condition_ii_method = "proxy";
  ValidationReport oracle_axioms;
  RankOracle oracle;

  bool passed() const { return condition_i && condition_ii; }
};

PositionReport check_subgeneral_position(const Arrangement& arr);

struct HilbertOptions {
  long max_qm = 5000;
};

/// Residues modulo I_V of all degree-m monomials in the equalized Q_j.
struct HilbertSlice {
  int m = 0;
  std::vector<std::vector<int>> exponents;     // I_1 .. I_{q_m}, lex-descending
  std::vector<std::vector<Rational>> residues;  // coordinates on standard monomials
  std::vector<int> basis;                       // greedy independent subset in index order
  long rank() const { return static_cast<long>(basis.size()); }
};

HilbertSlice hilbert_slice(const Arrangement& arr, int m, const HilbertOptions& options = {});

struct HilbertData {
  int m = 0;
  long H = 0;
  long q_m = 0;
  std::vector<std::vector<int>> basis;  // exponent vectors whose residues form a basis
  std::string matrix_provenance;
};

HilbertData hilbert_function(const Arrangement& arr, int m, const HilbertOptions& options = {});

struct HilbertWeight {
  Rational S;
  std::vector<int> basis;  // indices into HilbertSlice::exponents
};

/// Greedy maximum of sum I_i . c over monomial bases (matroid greedy).
HilbertWeight hilbert_weight(const HilbertSlice& slice, const std::vector<Rational>& c);
HilbertWeight hilbert_weight(const Arrangement& arr, int m, const std::vector<Rational>& c,
                             const HilbertOptions& options = {});

struct HilbertBoundReport {
  Rational lhs;    // S / (m H)
  Rational rhs;    // (c_{i_0}+...+c_{i_n})/(n+1) - (2n+1) Delta / m * max c
  Rational slack;  // lhs - rhs
  long delta = 0;  // d^n deg V
  long H = 0;
  Rational S;
};

/// Evaluates both sides of the Hilbert-weight lower bound at (m, c) for the
/// coordinate subset (1-based). Throws DomainError when m <= Delta or the
/// coordinate subset meets Y.
HilbertBoundReport verify_hilbert_lower_bound(const Arrangement& arr, int m, const std::vector<Rational>& c,
                                              const std::vector<int>& coordinates,
                                              const HilbertOptions& options = {});

}  // namespace nochka
