#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace nochka {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (decimal digits only). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

/// log10 of a positive big integer, accurate to double precision.
double log10_big(const BigInt& z);

BigInt binomial(unsigned long n, unsigned long k);

/// Exact element of Q(i). Used for curve coefficients and Wronskians.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(Rational real) : re(std::move(real)), im(0) {}  // NOLINT
  GaussRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussRational(long v) : re(v), im(0) {}  // NOLINT

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(GaussRational a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

std::string to_string(const GaussRational& z);

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }

}  // namespace nochka
