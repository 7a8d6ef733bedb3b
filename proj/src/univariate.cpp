#include "nochka/univariate.hpp"

#include <algorithm>
#include <sstream>

#include "nochka/errors.hpp"

namespace nochka {

namespace {

bool rational_less(const GaussRational& a, const GaussRational& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

}  // namespace

QIPoly::QIPoly(std::vector<GaussRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QIPoly::QIPoly(const GaussRational& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

QIPoly QIPoly::z() { return monomial(GaussRational(1), 1); }

QIPoly QIPoly::monomial(const GaussRational& c, int power) {
  std::vector<GaussRational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return QIPoly(std::move(v));
}

void QIPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussRational QIPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return GaussRational();
  return coeffs_[static_cast<std::size_t>(power)];
}

QIPoly QIPoly::derivative() const {
  std::vector<GaussRational> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * GaussRational(static_cast<long>(k)));
  return QIPoly(std::move(out));
}

QIPoly QIPoly::monic() const {
  if (is_zero()) return *this;
  const GaussRational inv = GaussRational(1) / leading();
  QIPoly out = *this;
  out *= inv;
  return out;
}

QIPoly QIPoly::pow(unsigned e) const {
  QIPoly result(GaussRational(1));
  QIPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

int QIPoly::valuation() const {
  int k = 0;
  while (k < static_cast<int>(coeffs_.size()) && coeffs_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return is_zero() ? 0 : k;
}

GaussRational QIPoly::eval(const GaussRational& x) const {
  GaussRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> QIPoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

std::vector<std::complex<double>> QIPoly::numeric_coeffs() const {
  std::vector<std::complex<double>> out;
  for (const auto& c : coeffs_) out.push_back(c.to_complex());
  return out;
}

QIPoly& QIPoly::operator+=(const QIPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QIPoly& QIPoly::operator-=(const QIPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QIPoly& QIPoly::operator*=(const GaussRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

QIPoly operator*(const QIPoly& a, const QIPoly& b) {
  if (a.is_zero() || b.is_zero()) return QIPoly();
  std::vector<GaussRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QIPoly(std::move(out));
}

bool operator<(const QIPoly& a, const QIPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
                                      rational_less);
}

std::string QIPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = c == GaussRational(1);
    if (k == 0 || !unit) {
      out << nochka::to_string(c);
      if (k > 0) out << "*";
    }
    if (k > 0) out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

std::pair<QIPoly, QIPoly> divmod(const QIPoly& a, const QIPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<GaussRational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {QIPoly(), a};
  std::vector<GaussRational> quot(static_cast<std::size_t>(da - db) + 1);
  const GaussRational inv = GaussRational(1) / b.leading();
  for (int k = da - db; k >= 0; --k) {
    const GaussRational c = rem[static_cast<std::size_t>(k + db)] * inv;
    quot[static_cast<std::size_t>(k)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {QIPoly(std::move(quot)), QIPoly(std::move(rem))};
}

QIPoly exact_div(const QIPoly& a, const QIPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw AssertionFailure("inexact polynomial division");
  return q;
}

QIPoly gcd(const QIPoly& a, const QIPoly& b) {
  QIPoly x = a.monic();
  QIPoly y = b.monic();
  while (!y.is_zero()) {
    QIPoly r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<QIPoly, int>> squarefree_decomposition(const QIPoly& p) {
  std::vector<std::pair<QIPoly, int>> out;
  if (p.degree() < 1) return out;
  const QIPoly dp = p.derivative();
  QIPoly a = gcd(p, dp);
  QIPoly b = exact_div(p, a);
  QIPoly c = exact_div(dp, a);
  QIPoly d = c - b.derivative();
  for (int k = 1; b.degree() >= 1; ++k) {
    const QIPoly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
  }
  return out;
}

int multiplicity(QIPoly a, const QIPoly& b) {
  if (b.degree() < 1) throw DomainError("multiplicity of a constant factor");
  if (a.is_zero()) throw DomainError("multiplicity in the zero polynomial");
  int k = 0;
  while (true) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return k;
    a = std::move(q);
    ++k;
  }
}

std::vector<QIPoly> gcd_free_basis(const std::vector<QIPoly>& polys) {
  std::vector<QIPoly> basis;
  for (const auto& p : polys) {
    if (p.degree() < 1) continue;
    for (const auto& [f, k] : squarefree_decomposition(p)) basis.push_back(f);
  }
  // Refine until pairwise coprime: replace a, b with a/g, b/g, g.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        const QIPoly g = gcd(basis[i], basis[j]);
        if (g.degree() < 1) continue;
        QIPoly a = exact_div(basis[i], g).monic();
        QIPoly b = exact_div(basis[j], g).monic();
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        for (QIPoly* x : {&a, &b}) {
          if (x->degree() >= 1) basis.push_back(std::move(*x));
        }
        basis.push_back(g);
        changed = true;
      }
    }
  }
  std::sort(basis.begin(), basis.end());
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

}  // namespace nochka
