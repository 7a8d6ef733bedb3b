#include "nochka/rational.hpp"

#include <cctype>
#include <cmath>

#include "nochka/errors.hpp"

namespace nochka {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  }
  BigInt d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash);
  Rational r(BigInt(std::string(num), 10), d);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

double log10_big(const BigInt& z) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
  return std::log10(mantissa) + static_cast<double>(exponent) * std::log10(2.0);
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  const Rational norm = o.re * o.re + o.im * o.im;
  if (sgn(norm) == 0) throw DomainError("division by zero in Q(i)");
  Rational r = (re * o.re + im * o.im) / norm;
  Rational i = (im * o.re - re * o.im) / norm;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussRational& z) {
  if (sgn(z.im) == 0) return z.re.get_str();
  const Rational magnitude = abs(z.im);
  std::string imag = magnitude == 1 ? std::string("i") : magnitude.get_str() + "i";
  if (sgn(z.re) == 0) return (sgn(z.im) < 0 ? "-" : "") + imag;
  return "(" + z.re.get_str() + (sgn(z.im) < 0 ? "-" : "+") + imag + ")";
}

}  // namespace nochka
