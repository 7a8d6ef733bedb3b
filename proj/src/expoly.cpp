#include "nochka/expoly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "nochka/errors.hpp"

namespace nochka {

namespace {

void normalize(std::vector<ExpTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const ExpTerm& a, const ExpTerm& b) { return a.exponent < b.exponent; });
  std::vector<ExpTerm> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().prefactor += t.prefactor;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(), [](const ExpTerm& t) { return t.prefactor.is_zero(); }),
               merged.end());
  terms = std::move(merged);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExpPoly parse() {
    ExpPoly e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  bool ident_char(std::size_t at) const {
    return at < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[at])) || text_[at] == '_');
  }

  ExpPoly expr() {
    ExpPoly acc = term();
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  ExpPoly term() {
    ExpPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (peek('/')) {
        const std::size_t at = pos_;
        ++pos_;
        const ExpPoly d = factor();
        if (!d.is_polynomial() || d.as_polynomial().degree() != 0) {
          pos_ = at;
          fail("division only by nonzero constants");
        }
        acc = acc * ExpPoly(QIPoly(GaussRational(1) / d.as_polynomial().leading()));
      } else {
        return acc;
      }
    }
  }

  ExpPoly factor() {
    if (accept('-')) return ExpPoly() - factor();
    if (accept('+')) return factor();
    ExpPoly base = atom();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 10000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  ExpPoly atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer());
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
        ++pos_;
        const BigInt den = integer();
        if (den == 0) fail("zero denominator");
        value /= Rational(den);
      }
      if (pos_ < text_.size() && text_[pos_] == 'i' && !ident_char(pos_ + 1)) {
        ++pos_;
        return ExpPoly(QIPoly(GaussRational(Rational(0), value)));
      }
      if (ident_char(pos_)) fail("expected an operator after a number");
      return ExpPoly(QIPoly(GaussRational(value)));
    }
    if (c == '(') {
      ++pos_;
      ExpPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (ident_char(pos_)) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "z") return ExpPoly(QIPoly::z());
      if (word == "i") return ExpPoly(QIPoly(GaussRational(Rational(0), Rational(1))));
      if (word == "exp") {
        if (!accept('(')) fail("expected '(' after exp");
        const std::size_t arg_at = pos_;
        ExpPoly arg = expr();
        if (!accept(')')) fail("expected ')'");
        if (!arg.is_zero() && !arg.is_polynomial()) {
          pos_ = arg_at;
          fail("exp argument must be a polynomial in z");
        }
        return ExpPoly(QIPoly(GaussRational(1)), arg.as_polynomial());
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::complex<double> horner(const std::vector<std::complex<double>>& c, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ExpPoly::ExpPoly(const QIPoly& p) {
  if (!p.is_zero()) terms_.push_back({p, QIPoly()});
}

ExpPoly::ExpPoly(const QIPoly& prefactor, const QIPoly& exponent) {
  if (!prefactor.is_zero()) terms_.push_back({prefactor, exponent});
}

ExpPoly ExpPoly::from_terms(std::vector<ExpTerm> terms) {
  normalize(terms);
  ExpPoly out;
  out.terms_ = std::move(terms);
  return out;
}

bool ExpPoly::is_polynomial() const { return terms_.size() == 1 && terms_[0].exponent.is_zero(); }

QIPoly ExpPoly::as_polynomial() const {
  if (is_zero()) return QIPoly();
  if (!is_polynomial()) throw DomainError("not a polynomial: " + to_string());
  return terms_[0].prefactor;
}

bool ExpPoly::is_unit() const { return terms_.size() == 1 && terms_[0].prefactor.degree() == 0; }

ExpPoly ExpPoly::derivative() const {
  std::vector<ExpTerm> out;
  for (const auto& t : terms_) {
    out.push_back({t.prefactor.derivative() + t.prefactor * t.exponent.derivative(), t.exponent});
  }
  return from_terms(std::move(out));
}

ExpPoly ExpPoly::pow(unsigned e) const {
  ExpPoly result(QIPoly(GaussRational(1)));
  ExpPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  std::vector<ExpTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  normalize(all);
  terms_ = std::move(all);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  std::vector<ExpTerm> all = terms_;
  for (const auto& t : o.terms_) all.push_back({-t.prefactor, t.exponent});
  normalize(all);
  terms_ = std::move(all);
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpTerm> out;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.prefactor * t.prefactor, s.exponent + t.exponent});
  }
  return ExpPoly::from_terms(std::move(out));
}

bool operator==(const ExpPoly& a, const ExpPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (!(a.terms_[k].prefactor == b.terms_[k].prefactor) || !(a.terms_[k].exponent == b.terms_[k].exponent)) {
      return false;
    }
  }
  return true;
}

std::string ExpPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k > 0) out += " + ";
    const auto& t = terms_[k];
    if (t.exponent.is_zero()) {
      out += t.prefactor.to_string();
    } else {
      out += "(" + t.prefactor.to_string() + ")*exp(" + t.exponent.to_string() + ")";
    }
  }
  return out;
}

ExpPoly parse_exppoly(std::string_view text) { return Parser(text).parse(); }

ExpPolyEvaluator::ExpPolyEvaluator(const ExpPoly& f) {
  for (const auto& t : f.terms()) terms_.push_back({t.prefactor.numeric_coeffs(), t.exponent.numeric_coeffs()});
}

std::complex<double> ExpPolyEvaluator::log_value(std::complex<double> z) const {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  thread_local std::vector<std::complex<double>> logs;
  logs.clear();
  std::size_t best = 0;
  for (const auto& t : terms_) {
    const std::complex<double> p = horner(t.prefactor, z);
    if (p == 0.0) continue;
    logs.push_back(std::log(p) + horner(t.exponent, z));
    if (logs.back().real() > logs[best].real()) best = logs.size() - 1;
  }
  if (logs.empty()) return {kNegInf, 0.0};
  const std::complex<double> top = logs[best];
  std::complex<double> sum = 0.0;
  for (const auto& a : logs) sum += std::exp(a - top);
  if (sum == 0.0) return {kNegInf, 0.0};
  return top + std::log(sum);
}

bool Curve::is_polynomial() const {
  return std::all_of(coords.begin(), coords.end(), [](const ExpPoly& f) { return f.is_zero() || f.is_polynomial(); });
}

std::vector<QIPoly> Curve::polynomial_coords() const {
  std::vector<QIPoly> out;
  for (const auto& f : coords) out.push_back(f.as_polynomial());
  return out;
}

Reducedness check_reduced(const Curve& curve) {
  if (std::all_of(curve.coords.begin(), curve.coords.end(), [](const ExpPoly& f) { return f.is_zero(); })) {
    return Reducedness::Violated;
  }
  if (curve.is_polynomial()) {
    QIPoly g;
    for (const auto& f : curve.coords) g = gcd(g, f.as_polynomial());
    return g.degree() == 0 ? Reducedness::Verified : Reducedness::Violated;
  }
  for (const auto& f : curve.coords) {
    if (f.is_unit()) return Reducedness::Verified;
  }
  return Reducedness::Unverified;
}

ExpPoly compose(const Polynomial& q, const Curve& curve) {
  if (q.nvars() != curve.coords.size()) throw DomainError("polynomial and curve dimensions differ");
  std::map<std::pair<std::size_t, int>, ExpPoly> powers;
  auto power = [&](std::size_t i, int e) -> const ExpPoly& {
    auto key = std::make_pair(i, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, curve.coords[i].pow(static_cast<unsigned>(e))).first;
    return it->second;
  };
  ExpPoly out;
  for (const auto& t : q.terms()) {
    ExpPoly prod(QIPoly(GaussRational(t.coeff)));
    for (std::size_t i = 0; i < q.nvars(); ++i) {
      if (t.monomial.exponents[i] > 0) prod = prod * power(i, t.monomial.exponents[i]);
    }
    out += prod;
  }
  return out;
}

Curve read_curve(std::istream& in) {
  Curve curve;
  int M = -1;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      std::istringstream ss(line);
      std::string section;
      std::string field;
      ss >> section >> field;
      if (section != "[curve]" || field.rfind("M=", 0) != 0) {
        throw ParseError("line " + std::to_string(line_no) + ": expected '[curve] M=<int>'", line_no);
      }
      try {
        M = std::stoi(field.substr(2));
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(line_no) + ": bad M", line_no);
      }
      if (M < 1) throw ParseError("line " + std::to_string(line_no) + ": M must be positive", line_no);
      continue;
    }
    if (M < 0) throw ParseError("line " + std::to_string(line_no) + ": coordinate before [curve]", line_no);
    try {
      curve.coords.push_back(parse_exppoly(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  if (M < 0) throw ParseError("missing [curve] header", line_no);
  if (curve.M() != M) {
    throw ParseError("expected " + std::to_string(M + 1) + " coordinates, got " + std::to_string(curve.coords.size()),
                     line_no);
  }
  return curve;
}

void write_curve(std::ostream& out, const Curve& curve) {
  out << "[curve] M=" << curve.M() << "\n";
  for (const auto& f : curve.coords) out << f.to_string() << "\n";
}

}  // namespace nochka
