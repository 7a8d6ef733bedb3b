#pragma once

// Exact multivariate polynomials over Q, the textual polynomial grammar,
// Buchberger's algorithm, normal forms and projective dimension.

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nochka/rational.hpp"

namespace nochka {

enum class TermOrder { DegRevLex, Lex };

struct Monomial {
  std::vector<int> exponents;
  int degree = 0;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents(nvars, 0) {}
  explicit Monomial(std::vector<int> exps);

  std::size_t nvars() const { return exponents.size(); }
  bool divides(const Monomial& other) const;
  /// Bitmask of variables with positive exponent.
  unsigned long support() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// -1, 0, 1 as a is smaller than, equal to, or larger than b.
int compare(const Monomial& a, const Monomial& b, TermOrder order);

/// All monomials of total degree m in nvars variables, lexicographically
/// descending (x0^m first).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int m);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial with terms kept strictly descending in its term order and
/// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, TermOrder order = TermOrder::DegRevLex)
      : nvars_(nvars), order_(order) {}

  static Polynomial constant(std::size_t nvars, const Rational& c,
                             TermOrder order = TermOrder::DegRevLex);
  static Polynomial variable(std::size_t nvars, std::size_t index,
                             TermOrder order = TermOrder::DegRevLex);
  static Polynomial monomial(const Monomial& m, const Rational& c,
                             TermOrder order = TermOrder::DegRevLex);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               TermOrder order = TermOrder::DegRevLex);

  std::size_t nvars() const { return nvars_; }
  TermOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.degree == 0); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  /// Coefficient of m (zero when absent).
  Rational coeff(const Monomial& m) const;
  /// Maximum absolute value of the coefficients.
  Rational max_abs_coeff() const;

  Polynomial with_order(TermOrder order) const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// a - c * m * b, the elementary reduction step.
  Polynomial minus_scaled(const Rational& c, const Monomial& m, const Polynomial& b) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  TermOrder order_ = TermOrder::DegRevLex;
  std::vector<Term> terms_;
};

struct ParseOptions {
  bool require_homogeneous = false;
  bool require_nonzero = false;
};

/// Grammar: terms separated by '+'/'-'; term := [rational] {'*' variable ['^' int]}
/// where a term may also start directly with a variable; rational := int | int/int.
/// Whitespace is ignored. Throws ParseError with the character position.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            const ParseOptions& options = {});

struct GroebnerOptions {
  TermOrder order = TermOrder::DegRevLex;
  /// Maximum number of S-polynomial reductions before ResourceError.
  std::size_t max_steps = 200000;
};

/// Reduced Gröbner basis (monic, sorted by descending leading monomial).
/// Buchberger with sugar pair selection and the product and chain criteria.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const GroebnerOptions& options = {});

/// Full reduction of p modulo basis; terms of the result are not divisible by
/// any leading monomial of the basis.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis);

/// Homogeneous ideal with a lazily computed, write-once reduced Gröbner basis.
class Ideal {
 public:
  Ideal(std::size_t nvars, std::vector<Polynomial> generators, GroebnerOptions options = {});

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const GroebnerOptions& options() const { return options_; }
  const std::vector<Polynomial>& groebner() const;

  Ideal with(const std::vector<Polynomial>& extra) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };
  std::size_t nvars_;
  std::vector<Polynomial> generators_;
  GroebnerOptions options_;
  std::shared_ptr<Cache> cache_;
};

Polynomial normal_form(const Polynomial& p, const Ideal& ideal);

/// Dimension of the projective zero set; -1 when it is empty.
int ideal_dimension(const Ideal& ideal);

/// Degree-m standard monomials (not divisible by any leading monomial of the
/// Gröbner basis); their residues form a basis of S_m / I_m.
std::vector<Monomial> standard_monomials(const Ideal& ideal, int m);

/// dim I_m = binom(M+m, m) - #standard monomials of degree m.
long degree_m_slice_rank(const Ideal& ideal, int m);

}  // namespace nochka
