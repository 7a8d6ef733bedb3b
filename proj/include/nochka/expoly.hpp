#pragma once

// Exponential polynomials sum_k P_k(z) exp(E_k(z)) with P_k, E_k in Q(i)[z],
// holomorphic curves built from them, and the curve text format.

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nochka/poly.hpp"
#include "nochka/univariate.hpp"

namespace nochka {

struct ExpTerm {
  QIPoly prefactor;
  QIPoly exponent;
};

/// Terms have pairwise distinct exponents and nonzero prefactors, sorted by
/// exponent. This makes the representation canonical: the sum is identically
/// zero iff there are no terms.
class ExpPoly {
 public:
  ExpPoly() = default;
  ExpPoly(const QIPoly& p);  // NOLINT: polynomials convert implicitly
  ExpPoly(const QIPoly& prefactor, const QIPoly& exponent);

  static ExpPoly from_terms(std::vector<ExpTerm> terms);

  const std::vector<ExpTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when the only exponent is the zero polynomial.
  bool is_polynomial() const;
  /// The polynomial itself; requires is_polynomial() or is_zero().
  QIPoly as_polynomial() const;
  /// True when it is c*exp(E) for a nonzero constant c (never vanishes).
  bool is_unit() const;

  ExpPoly derivative() const;
  ExpPoly pow(unsigned e) const;

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend bool operator==(const ExpPoly& a, const ExpPoly& b);

  std::string to_string() const;

 private:
  std::vector<ExpTerm> terms_;
};

/// Parses an expression in z: numbers (integers, a/b, with a trailing i for
/// imaginary literals), i, z, +, -, *, / by constants, ^ with a nonnegative
/// integer exponent, parentheses and exp(polynomial). Throws ParseError.
ExpPoly parse_exppoly(std::string_view text);

/// Floating-point evaluator working in the log domain so that huge exponents
/// do not overflow.
class ExpPolyEvaluator {
 public:
  explicit ExpPolyEvaluator(const ExpPoly& f);
  /// Complex logarithm (some branch) of f(z); real part -inf at a zero.
  std::complex<double> log_value(std::complex<double> z) const;
  double log_abs(std::complex<double> z) const { return log_value(z).real(); }
  std::complex<double> value(std::complex<double> z) const { return std::exp(log_value(z)); }

 private:
  struct Term {
    std::vector<std::complex<double>> prefactor;
    std::vector<std::complex<double>> exponent;
  };
  std::vector<Term> terms_;
};

/// Holomorphic map C -> P^M given by M+1 exponential polynomials.
struct Curve {
  std::vector<ExpPoly> coords;

  int M() const { return static_cast<int>(coords.size()) - 1; }
  bool is_polynomial() const;
  /// Polynomial coordinates; requires is_polynomial().
  std::vector<QIPoly> polynomial_coords() const;
};

enum class Reducedness { Verified, Violated, Unverified };

/// Polynomial curves: exact gcd test. Otherwise Verified when some coordinate
/// never vanishes (c*exp(E)), else Unverified.
Reducedness check_reduced(const Curve& curve);

/// Q(f_0, ..., f_M), exact. Q must have M+1 variables.
ExpPoly compose(const Polynomial& q, const Curve& curve);

/// "[curve] M=<int>" followed by M+1 coordinate lines; '#' comments.
Curve read_curve(std::istream& in);
void write_curve(std::ostream& out, const Curve& curve);

}  // namespace nochka
