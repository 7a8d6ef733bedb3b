#pragma once

// Exact univariate polynomials over Q(i) in the variable z.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "nochka/rational.hpp"

namespace nochka {

class QIPoly {
 public:
  QIPoly() = default;
  /// Coefficients by ascending power; trailing zeros are dropped.
  explicit QIPoly(std::vector<GaussRational> coeffs);
  QIPoly(const GaussRational& c);  // NOLINT: constants convert implicitly

  static QIPoly z();
  static QIPoly monomial(const GaussRational& c, int power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<GaussRational>& coeffs() const { return coeffs_; }
  GaussRational coeff(int power) const;
  const GaussRational& leading() const { return coeffs_.back(); }

  QIPoly derivative() const;
  QIPoly monic() const;
  QIPoly pow(unsigned e) const;
  /// Largest k with z^k dividing the polynomial (0 for the zero polynomial).
  int valuation() const;

  GaussRational eval(const GaussRational& x) const;
  std::complex<double> eval(std::complex<double> x) const;
  std::vector<std::complex<double>> numeric_coeffs() const;

  QIPoly& operator+=(const QIPoly& o);
  QIPoly& operator-=(const QIPoly& o);
  QIPoly& operator*=(const GaussRational& c);

  friend QIPoly operator+(QIPoly a, const QIPoly& b) { return a += b; }
  friend QIPoly operator-(QIPoly a, const QIPoly& b) { return a -= b; }
  friend QIPoly operator-(QIPoly a) { return a *= GaussRational(-1); }
  friend QIPoly operator*(const QIPoly& a, const QIPoly& b);
  friend QIPoly operator*(QIPoly a, const GaussRational& c) { return a *= c; }
  friend bool operator==(const QIPoly& a, const QIPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const QIPoly& a, const QIPoly& b);  // arbitrary total order

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<GaussRational> coeffs_;
};

/// Quotient and remainder; throws DomainError on division by zero.
std::pair<QIPoly, QIPoly> divmod(const QIPoly& a, const QIPoly& b);
/// Exact quotient; throws AssertionFailure when b does not divide a.
QIPoly exact_div(const QIPoly& a, const QIPoly& b);
/// Monic gcd (zero when both are zero).
QIPoly gcd(const QIPoly& a, const QIPoly& b);

/// Yun's square-free decomposition: p = lead * prod_k factors[k].first^k with
/// pairwise coprime monic square-free factors (constant factors omitted).
std::vector<std::pair<QIPoly, int>> squarefree_decomposition(const QIPoly& p);

/// Multiplicity of a nonconstant factor b in a (a nonzero).
int multiplicity(QIPoly a, const QIPoly& b);

/// Pairwise coprime monic square-free polynomials such that every input is a
/// constant times a product of powers of them.
std::vector<QIPoly> gcd_free_basis(const std::vector<QIPoly>& polys);

}  // namespace nochka
