#include "nochka/geometry.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "nochka/errors.hpp"
#include "nochka/linalg.hpp"

namespace nochka {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int parse_int_field(const std::string& token, std::size_t line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": expected integer, got '" + token + "'", line);
  }
}

Subset indices_to_subset(const std::vector<int>& indices, int q) {
  Subset s = 0;
  for (int i : indices) {
    if (i < 1 || i > q) throw DomainError("coordinate index " + std::to_string(i) + " out of range");
    s |= singleton(i);
  }
  return s;
}

Ideal intersection_ideal(const Arrangement& arr, Subset r) {
  std::vector<Polynomial> gens = arr.variety;
  for (int j : indices_of(r)) gens.push_back(arr.hypersurfaces[static_cast<std::size_t>(j - 1)].poly);
  return Ideal(arr.vars.size(), std::move(gens), arr.groebner);
}

int codimension(const Arrangement& arr, Subset r) {
  const int dim = ideal_dimension(intersection_ideal(arr, r));
  return dim < 0 ? arr.n + 1 : arr.n - dim;
}

}  // namespace

std::vector<int> Arrangement::degrees() const {
  std::vector<int> out;
  for (const auto& h : hypersurfaces) out.push_back(h.degree());
  return out;
}

long Arrangement::common_degree() const {
  long d = 1;
  for (const auto& h : hypersurfaces) d = std::lcm(d, static_cast<long>(h.degree()));
  return d;
}

Ideal Arrangement::variety_ideal() const { return Ideal(vars.size(), variety, groebner); }

std::vector<Polynomial> Arrangement::equalized() const {
  const long d = common_degree();
  std::vector<Polynomial> out;
  for (const auto& h : hypersurfaces) out.push_back(h.poly.pow(static_cast<unsigned>(d / h.degree())));
  return out;
}

Arrangement read_arrangement(std::istream& in) {
  Arrangement arr;
  enum class Section { None, Space, Vars, Variety, Hypersurfaces } section = Section::None;
  bool have_space = false;
  bool have_vars = false;
  std::string raw;
  std::size_t line_no = 0;

  auto handle_space = [&](const std::string& body) {
    std::istringstream ss(body);
    std::string tok;
    while (ss >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected key=value", line_no);
      const std::string key = tok.substr(0, eq);
      const int v = parse_int_field(tok.substr(eq + 1), line_no);
      if (key == "M") arr.M = v;
      else if (key == "n") arr.n = v;
      else if (key == "degV") arr.degV = v;
      else if (key == "N") arr.N = v;
      else throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", line_no);
      have_space = true;
    }
  };
  auto handle_vars = [&](const std::string& body) {
    std::istringstream ss(body);
    std::string tok;
    while (ss >> tok) arr.vars.push_back(tok);
    have_vars = have_vars || !arr.vars.empty();
  };
  auto parse_poly = [&](const std::string& text) {
    if (!have_vars) throw ParseError("line " + std::to_string(line_no) + ": polynomial before [vars]", line_no);
    try {
      return parse_polynomial(text, arr.vars, ParseOptions{true, true});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      const auto close = line.find(']');
      if (close == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": unterminated section", line_no);
      const std::string name = line.substr(1, close - 1);
      const std::string rest = trim(line.substr(close + 1));
      if (name == "space") section = Section::Space;
      else if (name == "vars") section = Section::Vars;
      else if (name == "variety") section = Section::Variety;
      else if (name == "hypersurfaces") section = Section::Hypersurfaces;
      else throw ParseError("line " + std::to_string(line_no) + ": unknown section '" + name + "'", line_no);
      line = rest;
      if (line.empty()) continue;
    }
    switch (section) {
      case Section::None:
        throw ParseError("line " + std::to_string(line_no) + ": content outside a section", line_no);
      case Section::Space:
        handle_space(line);
        break;
      case Section::Vars:
        handle_vars(line);
        break;
      case Section::Variety:
        arr.variety.push_back(parse_poly(line));
        break;
      case Section::Hypersurfaces: {
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected 'name : polynomial'", line_no);
        const std::string name = trim(line.substr(0, colon));
        if (name.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty hypersurface name", line_no);
        arr.hypersurfaces.push_back({name, parse_poly(line.substr(colon + 1))});
        break;
      }
    }
  }
  if (!have_space) throw ParseError("missing [space] section", line_no);
  if (!have_vars) throw ParseError("missing [vars] section", line_no);
  if (static_cast<int>(arr.vars.size()) != arr.M + 1) {
    throw ParseError("expected " + std::to_string(arr.M + 1) + " variables, got " + std::to_string(arr.vars.size()), line_no);
  }
  if (arr.hypersurfaces.empty()) throw ParseError("no hypersurfaces", line_no);
  return arr;
}

void write_arrangement(std::ostream& out, const Arrangement& arr) {
  out << "[space] M=" << arr.M << " n=" << arr.n << " degV=" << arr.degV << " N=" << arr.N << "\n";
  out << "[vars]";
  for (const auto& v : arr.vars) out << ' ' << v;
  out << "\n[variety]\n";
  for (const auto& p : arr.variety) out << p.to_string(arr.vars) << "\n";
  out << "[hypersurfaces]\n";
  for (const auto& h : arr.hypersurfaces) out << h.name << " : " << h.poly.to_string(arr.vars) << "\n";
}

void check_arrangement(const Arrangement& arr) {
  if (arr.M < 1) throw DomainError("M must be at least 1");
  if (static_cast<int>(arr.vars.size()) != arr.M + 1) throw DomainError("variable count must be M+1");
  if (arr.n < 1 || arr.n > arr.M) throw DomainError("n must lie in [1, M]");
  if (arr.degV < 1) throw DomainError("degV must be positive");
  if (arr.N < arr.n) throw DomainError("N must be at least n");
  if (arr.q() < 1 || arr.q() > static_cast<int>(kMaxGroundSet)) throw DomainError("q must lie in [1, 20]");
  const Ideal iv = arr.variety_ideal();
  if (arr.variety.empty()) {
    if (arr.n != arr.M) throw DomainError("V = P^M requires n = M");
  } else {
    for (const auto& g : arr.variety) {
      if (!g.is_homogeneous() || g.is_zero()) throw DomainError("variety generators must be nonzero homogeneous");
    }
    const int dim = ideal_dimension(iv);
    if (dim != arr.n) {
      throw DomainError("declared n=" + std::to_string(arr.n) + " but the variety has dimension " + std::to_string(dim));
    }
  }
  for (const auto& h : arr.hypersurfaces) {
    if (h.poly.is_zero() || !h.poly.is_homogeneous() || h.degree() < 1) {
      throw DomainError("hypersurface " + h.name + " must be a nonconstant homogeneous polynomial");
    }
    if (normal_form(h.poly, iv).is_zero()) throw DomainError("hypersurface " + h.name + " contains V");
  }
}

RankOracle codim_oracle(const Arrangement& arr) {
  check_arrangement(arr);
  const int q = arr.q();
  const int top = arr.n + 1;
  const Subset all = full_set(q);
  std::vector<int> table(static_cast<std::size_t>(all) + 1, 0);
  // Increasing numeric order visits every K minus one element before K.
  for (Subset r = 1; r <= all; ++r) {
    bool pruned = false;
    for (int i : indices_of(r)) {
      if (table[r & ~singleton(i)] == top) {
        pruned = true;
        break;
      }
    }
    table[r] = pruned ? top : codimension(arr, r);
  }
  return RankOracle(q, arr.n, arr.N, std::move(table));
}

PositionReport check_subgeneral_position(const Arrangement& arr) {
  RankOracle oracle = codim_oracle(arr);
  PositionReport report{false, {}, false, "proxy", validate_rank_oracle(oracle), oracle};
  report.condition_i = true;
  const Subset all = full_set(arr.q());
  for (Subset r = 1; r <= all; ++r) {
    if (cardinality(r) == arr.N + 1 && oracle(r) != arr.n + 1) {
      report.condition_i = false;
      report.condition_i_witness = format_subset(r);
      break;
    }
  }
  report.condition_ii = report.oracle_axioms.ok();
  return report;
}

HilbertSlice hilbert_slice(const Arrangement& arr, int m, const HilbertOptions& options) {
  if (m < 1) throw DomainError("m must be at least 1");
  const int q = arr.q();
  const BigInt qm = binomial(static_cast<unsigned long>(q + m - 1), static_cast<unsigned long>(m));
  if (qm > options.max_qm) {
    throw ResourceError("q_m = " + qm.get_str() + " exceeds the cap " + std::to_string(options.max_qm));
  }
  const Ideal iv = arr.variety_ideal();
  const auto gens = arr.equalized();
  const long d = arr.common_degree();
  const auto standard = standard_monomials(iv, static_cast<int>(m * d));
  std::map<std::vector<int>, std::size_t> column;
  for (std::size_t k = 0; k < standard.size(); ++k) column.emplace(standard[k].exponents, k);

  HilbertSlice slice;
  slice.m = m;
  for (const auto& mono : monomials_of_degree(static_cast<std::size_t>(q), m)) slice.exponents.push_back(mono.exponents);

  // NF is multiplicative modulo I_V, so each product reuses the residue of its
  // predecessor with one exponent lowered.
  std::map<std::vector<int>, Polynomial> residue;
  residue.emplace(std::vector<int>(static_cast<std::size_t>(q), 0),
                  Polynomial::constant(arr.vars.size(), Rational(1), iv.options().order));
  auto residue_of = [&](auto&& self, const std::vector<int>& e) -> const Polynomial& {
    if (auto it = residue.find(e); it != residue.end()) return it->second;
    std::vector<int> lower = e;
    std::size_t j = 0;
    while (lower[j] == 0) ++j;
    --lower[j];
    const Polynomial prev = self(self, lower);
    Polynomial value = normal_form(prev * gens[j].with_order(iv.options().order), iv);
    return residue.emplace(e, std::move(value)).first->second;
  };

  EchelonBasis<Rational> echelon(standard.size());
  for (std::size_t i = 0; i < slice.exponents.size(); ++i) {
    const Polynomial& nf = residue_of(residue_of, slice.exponents[i]);
    std::vector<Rational> row(standard.size());
    for (const auto& t : nf.terms()) {
      const auto it = column.find(t.monomial.exponents);
      if (it == column.end()) throw AssertionFailure("normal form left a non-standard monomial");
      row[it->second] = t.coeff;
    }
    if (echelon.rank() < standard.size() && echelon.insert(row)) slice.basis.push_back(static_cast<int>(i));
    slice.residues.push_back(std::move(row));
  }
  if (arr.n >= 1 && slice.rank() < m + 1) {
    throw AssertionFailure("H(" + std::to_string(m) + ") = " + std::to_string(slice.rank()) + " < m+1");
  }
  return slice;
}

HilbertData hilbert_function(const Arrangement& arr, int m, const HilbertOptions& options) {
  const HilbertSlice slice = hilbert_slice(arr, m, options);
  HilbertData data;
  data.m = m;
  data.H = slice.rank();
  data.q_m = static_cast<long>(slice.exponents.size());
  for (int i : slice.basis) data.basis.push_back(slice.exponents[static_cast<std::size_t>(i)]);
  std::ostringstream prov;
  prov << data.q_m << " x " << (slice.residues.empty() ? 0 : slice.residues.front().size())
       << " exact normal-form coefficients of Q^I (Q_j raised to degree " << arr.common_degree()
       << ") modulo I_V on degree-" << m * arr.common_degree() << " standard monomials";
  data.matrix_provenance = prov.str();
  return data;
}

HilbertWeight hilbert_weight(const HilbertSlice& slice, const std::vector<Rational>& c) {
  const std::size_t q = slice.exponents.empty() ? 0 : slice.exponents.front().size();
  if (c.size() != q) throw DomainError("weight vector must have length q");
  for (const auto& x : c) {
    if (x < 0) throw DomainError("weights must be nonnegative");
  }
  std::vector<Rational> score(slice.exponents.size());
  for (std::size_t i = 0; i < slice.exponents.size(); ++i) {
    for (std::size_t j = 0; j < q; ++j) score[i] += slice.exponents[i][j] * c[j];
  }
  std::vector<int> order(slice.exponents.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return score[a] > score[b]; });

  const std::size_t dim = slice.residues.empty() ? 0 : slice.residues.front().size();
  EchelonBasis<Rational> echelon(dim);
  HilbertWeight out;
  for (int i : order) {
    if (echelon.rank() == static_cast<std::size_t>(slice.rank())) break;
    if (echelon.insert(slice.residues[static_cast<std::size_t>(i)])) {
      out.basis.push_back(i);
      out.S += score[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

HilbertWeight hilbert_weight(const Arrangement& arr, int m, const std::vector<Rational>& c,
                             const HilbertOptions& options) {
  return hilbert_weight(hilbert_slice(arr, m, options), c);
}

HilbertBoundReport verify_hilbert_lower_bound(const Arrangement& arr, int m, const std::vector<Rational>& c,
                                              const std::vector<int>& coordinates,
                                              const HilbertOptions& options) {
  if (static_cast<int>(c.size()) != arr.q()) throw DomainError("weight vector must have length q");
  if (static_cast<int>(coordinates.size()) != arr.n + 1) throw DomainError("coordinate subset must have n+1 elements");
  const Subset s = indices_to_subset(coordinates, arr.q());
  if (cardinality(s) != arr.n + 1) throw DomainError("coordinate subset has repeated indices");
  if (ideal_dimension(intersection_ideal(arr, s)) >= 0) {
    throw DomainError("coordinates " + format_subset(s) + " vanish simultaneously on V");
  }
  BigInt delta = arr.degV;
  for (int i = 0; i < arr.n; ++i) delta *= arr.common_degree();
  if (!delta.fits_slong_p() || delta >= m) {
    throw DomainError("m = " + std::to_string(m) + " must exceed d^n deg V = " + delta.get_str());
  }
  const HilbertSlice slice = hilbert_slice(arr, m, options);
  const HilbertWeight w = hilbert_weight(slice, c);

  HilbertBoundReport r;
  r.delta = delta.get_si();
  r.H = slice.rank();
  r.S = w.S;
  r.lhs = w.S / Rational(BigInt(m) * r.H);
  Rational sum;
  for (int i : coordinates) sum += c[static_cast<std::size_t>(i - 1)];
  const Rational max_c = *std::max_element(c.begin(), c.end());
  r.rhs = sum / (arr.n + 1) - Rational(BigInt(2 * arr.n + 1) * r.delta, BigInt(m)) * max_c;
  r.rhs.canonicalize();
  r.slack = r.lhs - r.rhs;
  return r;
}

}  // namespace nochka
