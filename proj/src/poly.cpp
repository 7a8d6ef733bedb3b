#include "nochka/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "nochka/errors.hpp"

namespace nochka {

// ---------------------------------------------------------------- monomials

Monomial::Monomial(std::vector<int> exps)
    : exponents(std::move(exps)), degree(std::accumulate(exponents.begin(), exponents.end(), 0)) {}

bool Monomial::divides(const Monomial& other) const {
  if (degree > other.degree) return false;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > other.exponents[i]) return false;
  }
  return true;
}

unsigned long Monomial::support() const {
  unsigned long mask = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) mask |= 1UL << i;
  }
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.exponents[i] = a.exponents[i] + b.exponents[i];
  out.degree = a.degree + b.degree;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) out.exponents[i] = a.exponents[i] - b.exponents[i];
  out.degree = a.degree - b.degree;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents[i], b.exponents[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) { return (a.support() & b.support()) == 0; }

int compare(const Monomial& a, const Monomial& b, TermOrder order) {
  if (order == TermOrder::DegRevLex) {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
      if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void fill_monomials(std::vector<int>& current, std::size_t index, int remaining,
                    std::vector<Monomial>& out) {
  if (index + 1 == current.size()) {
    current[index] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[index] = e;
    fill_monomials(current, index + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int m) {
  std::vector<Monomial> out;
  if (nvars == 0 || m < 0) return out;
  std::vector<int> current(nvars, 0);
  fill_monomials(current, 0, m, out);
  return out;
}

// -------------------------------------------------------------- polynomials

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, TermOrder order) {
  Polynomial p(nvars, order);
  if (sgn(c) != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, TermOrder order) {
  Monomial m(nvars);
  m.exponents.at(index) = 1;
  m.degree = 1;
  return monomial(m, Rational(1), order);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c, TermOrder order) {
  Polynomial p(m.nvars(), order);
  if (sgn(c) != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms, TermOrder order) {
  std::sort(terms.begin(), terms.end(), [order](const Term& a, const Term& b) {
    return compare(a.monomial, b.monomial, order) > 0;
  });
  Polynomial p(nvars, order);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree);
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial.degree == terms_.front().monomial.degree; });
}

Rational Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.monomial == m) return t.coeff;
  }
  return 0;
}

Rational Polynomial::max_abs_coeff() const {
  Rational best = 0;
  for (const auto& t : terms_) best = std::max<Rational>(best, abs(t.coeff));
  return best;
}

Polynomial Polynomial::with_order(TermOrder order) const {
  if (order == order_) return *this;
  return from_terms(nvars_, terms_, order);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  const Rational lc = leading_coeff();
  for (auto& t : out.terms_) t.coeff /= lc;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, Rational(1), order_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const Rational& scale, const Monomial* shift, TermOrder order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](std::size_t k) { return shift ? b[k].monomial * *shift : b[k].monomial; };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = shifted(j);
    if (i == a.size()) {
      out.push_back({std::move(mb), b[j++].coeff * scale});
      continue;
    }
    const int cmp = compare(a[i].monomial, mb, order);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({std::move(mb), b[j++].coeff * scale});
    } else {
      Rational c = a[i].coeff + b[j].coeff * scale;
      if (sgn(c) != 0) out.push_back({std::move(mb), std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

void require_compatible(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw DomainError("polynomial arithmetic: variable count mismatch");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(*this, o);
  const Polynomial& rhs = o.order_ == order_ ? o : o.with_order(order_);
  terms_ = merge_terms(terms_, rhs.terms_, Rational(1), nullptr, order_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_compatible(*this, o);
  const Polynomial& rhs = o.order_ == order_ ? o : o.with_order(order_);
  terms_ = merge_terms(terms_, rhs.terms_, Rational(-1), nullptr, order_);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  return Polynomial::from_terms(a.nvars_, std::move(products), a.order_);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  const Polynomial& rhs = a.order_ == b.order_ ? b : b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == rhs.terms_[i].monomial) || a.terms_[i].coeff != rhs.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::minus_scaled(const Rational& c, const Monomial& m, const Polynomial& b) const {
  Polynomial out(nvars_, order_);
  out.terms_ = merge_terms(terms_, b.terms_, Rational(-c), &m, order_);
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0) {
      os << '-';
      c = abs(c);
    }
    first = false;
    const bool unit = c == 1 && t.monomial.degree > 0;
    if (!unit) os << c.get_str();
    bool need_star = !unit;
    for (std::size_t i = 0; i < t.monomial.nvars(); ++i) {
      const int e = t.monomial.exponents[i];
      if (e == 0) continue;
      if (need_star) os << '*';
      os << names.at(i);
      if (e > 1) os << '^' << e;
      need_star = true;
    }
  }
  return os.str();
}

// ------------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names)
      : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial result(names_.size());
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      Term t = parse_term();
      t.coeff *= sign;
      result += Polynomial::monomial(t.monomial, t.coeff);
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  Term parse_term() {
    skip_ws();
    Term t{Monomial(names_.size()), Rational(1)};
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = parse_number();
      skip_ws();
      if (peek() != '*') return t;
      ++pos_;
    }
    while (need_factor) {
      skip_ws();
      const std::size_t at = pos_;
      const std::string name = parse_identifier();
      const auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) throw ParseError("unknown variable '" + name + "'", at);
      int exponent = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        const std::size_t epos = pos_;
        const std::string digits = parse_digits();
        exponent = std::stoi(digits);
        if (exponent < 1) throw ParseError("exponent must be a positive integer", epos);
      }
      const auto index = static_cast<std::size_t>(it - names_.begin());
      t.monomial.exponents[index] += exponent;
      t.monomial.degree += exponent;
      skip_ws();
      need_factor = peek() == '*';
      if (need_factor) ++pos_;
    }
    return t;
  }

  Rational parse_number() {
    const std::size_t start = pos_;
    std::string num = parse_digits();
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t dpos = pos_;
      std::string den = parse_digits();
      if (BigInt(den) == 0) throw ParseError("zero denominator", dpos);
      num += "/" + den;
    }
    try {
      return parse_rational(num);
    } catch (const ParseError&) {
      throw ParseError("malformed rational", start);
    }
  }

  std::string parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string parse_identifier() {
    const std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      throw ParseError("expected a variable", pos_);
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            const ParseOptions& options) {
  Polynomial p = PolyParser(text, names).parse();
  if (options.require_nonzero && p.is_zero()) throw ParseError("polynomial is zero", 0);
  if (options.require_homogeneous && !p.is_homogeneous()) {
    throw ParseError("polynomial '" + std::string(text) + "' is not homogeneous", 0);
  }
  return p;
}

// ---------------------------------------------------------------- Gröbner

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis) {
  std::vector<Term> remainder;
  Polynomial work = p;
  std::vector<Polynomial> reducers;
  reducers.reserve(basis.size());
  for (const auto& g : basis) {
    if (!g.is_zero()) reducers.push_back(g.order() == p.order() ? g : g.with_order(p.order()));
  }
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const Polynomial* hit = nullptr;
    for (const auto& g : reducers) {
      if (g.leading_monomial().divides(lt.monomial)) {
        hit = &g;
        break;
      }
    }
    if (hit) {
      work = work.minus_scaled(lt.coeff / hit->leading_coeff(), lt.monomial / hit->leading_monomial(), *hit);
    } else {
      remainder.push_back(lt);
      work = work.minus_scaled(Rational(1), Monomial(p.nvars()),
                               Polynomial::monomial(lt.monomial, lt.coeff, p.order()));
    }
  }
  return Polynomial::from_terms(p.nvars(), std::move(remainder), p.order());
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  int sugar;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Monomial& l) {
  const Polynomial a = Polynomial::monomial(l / f.leading_monomial(), Rational(1) / f.leading_coeff(), f.order()) * f;
  return a.minus_scaled(Rational(1) / g.leading_coeff(), l / g.leading_monomial(), g);
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& generators,
                                       const GroebnerOptions& options) {
  const TermOrder order = options.order;
  std::vector<Polynomial> basis;
  std::vector<int> sugar;
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_keys;

  auto add = [&](Polynomial h, int s) {
    h = h.monic();
    const std::size_t k = basis.size();
    basis.push_back(std::move(h));
    sugar.push_back(s);
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = lcm(basis[i].leading_monomial(), basis[k].leading_monomial());
      const int ps = std::max(sugar[i] - basis[i].leading_monomial().degree,
                              sugar[k] - basis[k].leading_monomial().degree) + l.degree;
      pending.push_back({i, k, std::move(l), ps});
      pending_keys.insert({i, k});
    }
  };

  for (const auto& g : generators) {
    Polynomial h = normal_form(g.with_order(order), basis);
    if (!h.is_zero()) add(std::move(h), g.degree());
  }

  std::size_t steps = 0;
  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [order](const Pair& a, const Pair& b) {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      return compare(a.lcm, b.lcm, order) < 0;
    });
    Pair pair = *best;
    pending.erase(best);
    pending_keys.erase({pair.i, pair.j});

    const Monomial& li = basis[pair.i].leading_monomial();
    const Monomial& lj = basis[pair.j].leading_monomial();
    if (coprime(li, lj)) continue;  // product criterion
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      if (!basis[k].leading_monomial().divides(pair.lcm)) continue;
      const auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending_keys.count(key(pair.i, k)) && !pending_keys.count(key(pair.j, k));
    }
    if (chain) continue;

    if (++steps > options.max_steps) {
      throw ResourceError("groebner_basis: step budget of " + std::to_string(options.max_steps) + " exceeded");
    }
    Polynomial r = normal_form(s_polynomial(basis[pair.i], basis[pair.j], pair.lcm), basis);
    if (!r.is_zero()) add(std::move(r), pair.sugar);
  }

  // Minimalize, then inter-reduce.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].leading_monomial();
      const auto& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (!(mi == mj) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    const Term lead = minimal[i].leading_term();
    Polynomial tail = minimal[i].minus_scaled(Rational(1), Monomial(lead.monomial.nvars()),
                                              Polynomial::monomial(lead.monomial, lead.coeff, order));
    reduced.push_back((Polynomial::monomial(lead.monomial, lead.coeff, order) + normal_form(tail, others)).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [order](const Polynomial& a, const Polynomial& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) > 0;
  });
  return reduced;
}

// -------------------------------------------------------------------- ideals

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> generators, GroebnerOptions options)
    : nvars_(nvars), generators_(std::move(generators)), options_(options), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.nvars() != nvars_) throw DomainError("ideal: generator has the wrong number of variables");
    if (!g.is_homogeneous()) throw DomainError("ideal: generators must be homogeneous");
  }
}

const std::vector<Polynomial>& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->basis = groebner_basis(generators_, options_); });
  return cache_->basis;
}

Ideal Ideal::with(const std::vector<Polynomial>& extra) const {
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return Ideal(nvars_, std::move(gens), options_);
}

Polynomial normal_form(const Polynomial& p, const Ideal& ideal) {
  return normal_form(p.with_order(ideal.options().order), ideal.groebner());
}

int ideal_dimension(const Ideal& ideal) {
  const auto& basis = ideal.groebner();
  const std::size_t nv = ideal.nvars();
  for (const auto& g : basis) {
    if (g.is_constant()) return -1;
  }
  std::vector<unsigned long> supports;
  for (const auto& g : basis) supports.push_back(g.leading_monomial().support());
  // Krull dimension of S / LT(I): largest variable set containing no leading-monomial support.
  int krull = 0;
  for (unsigned long u = 0; u < (1UL << nv); ++u) {
    const int size = std::popcount(u);
    if (size <= krull) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [u](unsigned long s) { return (s & ~u) == 0; });
    if (independent) krull = size;
  }
  if (krull == 0) {
    // Every variable has a pure power among the leading monomials; a power of
    // degree sum(a_i - 1) + 1 has no standard monomials left, so it must reduce to 0.
    std::vector<int> pure(nv, 0);
    for (const auto& g : basis) {
      const auto& m = g.leading_monomial();
      if (std::popcount(m.support()) == 1) {
        const std::size_t i = static_cast<std::size_t>(std::countr_zero(m.support()));
        pure[i] = pure[i] == 0 ? m.degree : std::min(pure[i], m.degree);
      }
    }
    int k = 1;
    for (int a : pure) k += a - 1;
    for (std::size_t i = 0; i < nv; ++i) {
      Monomial power(nv);
      power.exponents[i] = k;
      power.degree = k;
      if (!normal_form(Polynomial::monomial(power, Rational(1), ideal.options().order), basis).is_zero()) {
        throw AssertionFailure("ideal_dimension: x_i^k did not reduce to zero on an empty zero set");
      }
    }
  }
  return krull - 1;
}

std::vector<Monomial> standard_monomials(const Ideal& ideal, int m) {
  const auto& basis = ideal.groebner();
  std::vector<Monomial> out;
  for (auto& mono : monomials_of_degree(ideal.nvars(), m)) {
    const bool reducible = std::any_of(basis.begin(), basis.end(),
                                       [&](const Polynomial& g) { return g.leading_monomial().divides(mono); });
    if (!reducible) out.push_back(std::move(mono));
  }
  return out;
}

long degree_m_slice_rank(const Ideal& ideal, int m) {
  if (m < 0) throw DomainError("degree_m_slice_rank: m must be >= 0");
  const long total = static_cast<long>(monomials_of_degree(ideal.nvars(), m).size());
  return total - static_cast<long>(standard_monomials(ideal, m).size());
}

}  // namespace nochka
