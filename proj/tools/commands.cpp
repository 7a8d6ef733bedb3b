#include <charconv>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "cli.hpp"
#include "nochka/bounds.hpp"
#include "nochka/fixture.hpp"

namespace nochka::cli {

namespace {

std::string num(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json header(const std::string& command, const GlobalConfig& g) {
  return Json{{"schema", kSchema}, {"command", command}, {"settings", settings_json(g)}};
}

Json checks_json(const ValidationReport& report) {
  Json out = Json::array();
  for (const AxiomCheck& c : report.checks) {
    out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  }
  return out;
}

Table checks_table(const ValidationReport& report) {
  Table t{{"check", "passed", "witness"}, {}};
  for (const AxiomCheck& c : report.checks) t.rows.push_back({c.name, c.passed ? "true" : "false", c.witness});
  return t;
}

Json oracle_json(const RankOracle& c) { return Json{{"q", c.q()}, {"n", c.n()}, {"N", c.N()}}; }

Json filtration_json(const Filtration& f) {
  Json subsets = Json::array();
  for (Subset s : f.subsets) subsets.push_back(format_subset(s));
  return Json{{"subsets", subsets}, {"ratios", rational_list(f.ratios)}, {"theta", to_string(f.theta)}};
}

Json exponent_list(const std::vector<std::vector<int>>& exps) {
  Json out = Json::array();
  for (const auto& e : exps) out.push_back(e);
  return out;
}

Json truncation_json(const std::vector<std::optional<int>>& levels) {
  Json out = Json::array();
  for (const auto& l : levels) out.push_back(l ? Json(*l) : Json("inf"));
  return out;
}

std::vector<std::optional<int>> parse_truncation(const std::string& text) {
  std::vector<std::optional<int>> out;
  for (const std::string& s : split(text, ',')) {
    if (s == "inf" || s == "none") {
      out.push_back(std::nullopt);
    } else {
      const std::vector<int> v = parse_int_list(s);
      if (v.front() < 1) throw UsageError("truncation levels must be positive");
      out.push_back(v.front());
    }
  }
  return out;
}

std::vector<std::vector<Rational>> parse_hyperplanes(const std::string& text) {
  std::vector<std::vector<Rational>> out;
  for (const std::string& row : split(text, ';')) out.push_back(parse_rational_list(row));
  return out;
}

std::vector<std::vector<Rational>> hyperplanes_of(const Arrangement& arr) {
  std::vector<std::vector<Rational>> out;
  for (const Hypersurface& h : arr.hypersurfaces) {
    if (h.degree() != 1) throw DomainError("hypersurface " + h.name + " is not a hyperplane");
    std::vector<Rational> v(arr.M + 1);
    for (int i = 0; i <= arr.M; ++i) {
      Monomial m(static_cast<std::size_t>(arr.M + 1));
      m.exponents[i] = 1;
      m.degree = 1;
      v[i] = h.poly.coeff(m);
    }
    out.push_back(std::move(v));
  }
  return out;
}

template <typename Opts>
std::shared_ptr<Opts> make_opts() {
  return std::make_shared<Opts>();
}

// --- rank oracle commands --------------------------------------------------

void add_validate_rank(CLI::App& app, Action* out) {
  auto o = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("validate-rank", "Check the rank-oracle axioms");
  sub->add_option("--oracle", *o, "Oracle file")->required();
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const RankOracle c = load_oracle(*o);
      const ValidationReport v = validate_rank_oracle(c);
      Report r;
      r.json = header("validate-rank", g);
      r.json["oracle"] = oracle_json(c);
      r.json["valid"] = v.ok();
      r.json["checks"] = checks_json(v);
      r.table = checks_table(v);
      r.status = v.ok() ? 0 : 4;
      return r;
    };
  });
}

RankOracle load_valid_oracle(const std::string& path) {
  RankOracle c = load_oracle(path);
  const ValidationReport v = validate_rank_oracle(c);
  if (!v.ok()) throw DomainError("invalid rank oracle: " + v.summary());
  return c;
}

void add_weights(CLI::App& app, Action* out) {
  auto o = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("weights", "Nochka weights and Theta");
  sub->add_option("--oracle", *o, "Oracle file")->required();
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const RankOracle c = load_valid_oracle(*o);
      const WeightAssignment w = nochka_weights(c);
      const ValidationReport v = verify_weight_conditions(c, w);
      Rational sum = 0;
      for (const Rational& x : w.omega) sum += x;
      Rational identity = w.theta * (c.q() - 2 * c.N() + c.n() - 1) + c.n() + 1;
      Report r;
      r.json = header("weights", g);
      r.json["oracle"] = oracle_json(c);
      r.json["omega"] = rational_list(w.omega);
      r.json["theta"] = to_string(w.theta);
      r.json["omega_sum"] = to_string(sum);
      r.json["theta_identity"] = to_string(identity);
      r.json["filtration"] = filtration_json(w.filtration);
      r.json["conditions_hold"] = v.ok();
      r.json["checks"] = checks_json(v);
      Table t{{"index", "omega"}, {}};
      for (std::size_t j = 0; j < w.omega.size(); ++j) t.rows.push_back({std::to_string(j + 1), to_string(w.omega[j])});
      t.rows.push_back({"theta", to_string(w.theta)});
      r.table = t;
      r.status = v.ok() ? 0 : 4;
      return r;
    };
  });
}

void add_filtration(CLI::App& app, Action* out) {
  auto o = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("filtration", "Min-ratio filtration R_0 < ... < R_s");
  sub->add_option("--oracle", *o, "Oracle file")->required();
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const RankOracle c = load_valid_oracle(*o);
      const Filtration f = build_filtration(c);
      const std::string problem = check_filtration(c, f);
      Report r;
      r.json = header("filtration", g);
      r.json["oracle"] = oracle_json(c);
      r.json["filtration"] = filtration_json(f);
      r.json["conditions_hold"] = problem.empty();
      r.json["violation"] = problem;
      Table t{{"step", "subset", "c", "ratio"}, {}};
      for (std::size_t i = 0; i < f.subsets.size(); ++i) {
        t.rows.push_back({std::to_string(i), format_subset(f.subsets[i]), std::to_string(c(f.subsets[i])),
                          i == 0 ? "" : to_string(f.ratios[i - 1])});
      }
      r.table = t;
      r.status = problem.empty() ? 0 : 4;
      return r;
    };
  });
}

void add_greedy(CLI::App& app, Action* out) {
  struct Opts {
    std::string oracle, R, E;
  };
  auto o = make_opts<Opts>();
  auto* sub = app.add_subcommand("greedy", "Greedy selection of c(R) indices from R");
  sub->add_option("--oracle", o->oracle, "Oracle file")->required();
  sub->add_option("--R", o->R, "Subset R as comma-separated 1-based indices")->required();
  sub->add_option("--E", o->E, "Nonnegative rationals E_1..E_q")->required();
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const RankOracle c = load_valid_oracle(o->oracle);
      const std::vector<int> idx = parse_int_list(o->R);
      for (int j : idx) {
        if (j < 1 || j > c.q()) throw UsageError("index out of range in --R");
      }
      const std::vector<Rational> e = parse_rational_list(o->E);
      if (static_cast<int>(e.size()) != c.q()) throw UsageError("--E needs exactly q values");
      const WeightAssignment w = nochka_weights(c);
      const GreedySelection sel = greedy_select(c, w, subset_of(idx), e);
      Report r;
      r.json = header("greedy", g);
      r.json["R"] = format_subset(subset_of(idx));
      r.json["c_R"] = c(subset_of(idx));
      r.json["indices"] = sel.indices;
      r.json["weighted_sum"] = to_string(sel.weighted_sum);
      r.json["selected_sum"] = to_string(sel.selected_sum);
      return r;
    };
  });
}

// --- arrangement commands --------------------------------------------------

void add_position_check(CLI::App& app, Action* out) {
  auto o = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("position-check", "N-subgeneral position of an arrangement");
  sub->add_option("--arr", *o, "Arrangement file")->required();
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const Arrangement arr = load_arrangement(*o, g);
      const PositionReport p = check_subgeneral_position(arr);
      Report r;
      r.json = header("position-check", g);
      r.json["q"] = arr.q();
      r.json["n"] = arr.n;
      r.json["N"] = arr.N;
      r.json["degrees"] = arr.degrees();
      r.json["coefficient"] = arr.q() - 2 * arr.N + arr.n - 1;
      r.json["condition_i"] = p.condition_i;
      r.json["condition_i_witness"] = p.condition_i_witness;
      r.json["condition_ii"] = p.condition_ii;
      r.json["condition_ii_method"] = p.condition_ii_method;
      r.json["oracle_axioms"] = checks_json(p.oracle_axioms);
      r.json["passed"] = p.passed();
      r.status = p.passed() ? 0 : 4;
      return r;
    };
  });
}

void add_oracle_dump(CLI::App& app, Action* out) {
  struct Opts {
    std::string arr, file;
  };
  auto o = make_opts<Opts>();
  auto* sub = app.add_subcommand("oracle-dump", "Codimension oracle of an arrangement");
  sub->add_option("--arr", o->arr, "Arrangement file")->required();
  sub->add_option("--out", o->file, "Also write the oracle in interchange format");
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const Arrangement arr = load_arrangement(o->arr, g);
      const RankOracle c = codim_oracle(arr);
      std::ostringstream text;
      write_rank_oracle(text, c);
      if (!o->file.empty()) {
        std::ofstream f(o->file);
        if (!f) throw UsageError("cannot write '" + o->file + "'");
        f << text.str();
      }
      Report r;
      r.json = header("oracle-dump", g);
      r.json["oracle"] = oracle_json(c);
      Json table = Json::object();
      Table t{{"subset", "c"}, {}};
      for (Subset s = 0; s < c.table().size(); ++s) {
        table[format_subset(s)] = c(s);
        t.rows.push_back({format_subset(s), std::to_string(c(s))});
      }
      r.json["codimension"] = table;
      r.json["written"] = o->file;
      r.table = t;
      return r;
    };
  });
}

void add_hilbert(CLI::App& app, Action* out) {
  struct Opts {
    std::string arr;
    int m = 1;
  };
  auto o = make_opts<Opts>();
  auto* sub = app.add_subcommand("hilbert", "Hilbert function H(m) of the intersection of V with the targets");
  sub->add_option("--arr", o->arr, "Arrangement file")->required();
  sub->add_option("--m", o->m, "Degree m")->required()->check(CLI::PositiveNumber);
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const Arrangement arr = load_arrangement(o->arr, g);
      const HilbertData h = hilbert_function(arr, o->m, HilbertOptions{g.max_qm});
      Report r;
      r.json = header("hilbert", g);
      r.json["m"] = h.m;
      r.json["H"] = h.H;
      r.json["q_m"] = h.q_m;
      r.json["basis"] = exponent_list(h.basis);
      r.json["matrix_provenance"] = h.matrix_provenance;
      return r;
    };
  });
}

void add_hilbert_weight(CLI::App& app, Action* out) {
  struct Opts {
    std::string arr, c, coords;
    int m = 1;
  };
  auto o = make_opts<Opts>();
  auto* sub = app.add_subcommand("hilbert-weight", "Hilbert weight S(m, c) and its lower bound");
  sub->add_option("--arr", o->arr, "Arrangement file")->required();
  sub->add_option("--m", o->m, "Degree m")->required()->check(CLI::PositiveNumber);
  sub->add_option("--c", o->c, "Nonnegative rationals c_1..c_q")->required();
  sub->add_option("--coords", o->coords, "Index subset for the lower-bound check (1-based)");
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const Arrangement arr = load_arrangement(o->arr, g);
      const std::vector<Rational> c = parse_rational_list(o->c);
      if (static_cast<int>(c.size()) != arr.q()) throw UsageError("--c needs exactly q values");
      for (const Rational& x : c) {
        if (sgn(x) < 0) throw UsageError("--c values must be nonnegative");
      }
      const HilbertOptions opts{g.max_qm};
      const HilbertSlice slice = hilbert_slice(arr, o->m, opts);
      const HilbertWeight w = hilbert_weight(slice, c);
      std::vector<std::vector<int>> basis;
      for (int i : w.basis) basis.push_back(slice.exponents[i]);
      Report r;
      r.json = header("hilbert-weight", g);
      r.json["m"] = o->m;
      r.json["H"] = slice.rank();
      r.json["c"] = rational_list(c);
      r.json["S"] = to_string(w.S);
      r.json["basis"] = exponent_list(basis);
      if (!o->coords.empty()) {
        const HilbertBoundReport b = verify_hilbert_lower_bound(arr, o->m, c, parse_int_list(o->coords), opts);
        r.json["lower_bound"] = Json{{"lhs", to_string(b.lhs)}, {"rhs", to_string(b.rhs)},
                                     {"slack", to_string(b.slack)}, {"delta", b.delta},
                                     {"holds", sgn(b.slack) >= 0}};
        if (sgn(b.slack) < 0) r.status = 4;
      }
      return r;
    };
  });
}

// --- bounds -------------------------------------------------------------------

void add_bounds(CLI::App& app, Action* out) {
  struct Opts {
    std::optional<int> n, degV, N, q, m;
    std::optional<long> H;
    std::string degrees, epsilon = "1", theta, arr;
  };
  auto o = make_opts<Opts>();
  auto* sub = app.add_subcommand("bounds", "m_0, q_{m_0} and truncation levels");
  sub->add_option("--n", o->n, "Dimension of V");
  sub->add_option("--degV", o->degV, "Degree of V");
  sub->add_option("--N", o->N, "Subgeneral index");
  sub->add_option("--q", o->q, "Number of hypersurfaces");
  sub->add_option("--degrees", o->degrees, "d_1..d_q");
  sub->add_option("--epsilon", o->epsilon, "Epsilon in (0, 1]");
  sub->add_option("--H", o->H, "Hilbert function value at --m");
  sub->add_option("--m", o->m, "Degree for the threshold check");
  sub->add_option("--theta", o->theta, "Theta for the threshold check");
  sub->add_option("--arr", o->arr, "Arrangement supplying parameters, Theta and H");
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      ParamSet p;
      std::optional<Arrangement> arr;
      if (!o->arr.empty()) {
        arr = load_arrangement(o->arr, g);
        p.n = arr->n;
        p.degV = arr->degV;
        p.N = arr->N;
        p.q = arr->q();
        p.degrees = arr->degrees();
      }
      const auto need = [](const std::optional<int>& v, const char* name) {
        if (!v) throw UsageError(std::string("missing --") + name + " (or --arr)");
        return *v;
      };
      if (o->n || !arr) p.n = need(o->n, "n");
      if (o->degV || !arr) p.degV = o->degV.value_or(1);
      if (o->N || !arr) p.N = need(o->N, "N");
      if (o->q || !arr) p.q = need(o->q, "q");
      if (!o->degrees.empty() || !arr) {
        if (o->degrees.empty()) throw UsageError("missing --degrees (or --arr)");
        p.degrees = parse_int_list(o->degrees);
      }
      p.epsilon = parse_epsilon(o->epsilon);
      check_params(p);

      std::optional<HilbertValue> hv;
      if (o->H && !o->m) throw UsageError("--H requires --m");
      if (o->m) {
        if (o->H) {
          hv = HilbertValue{*o->m, *o->H};
        } else if (arr) {
          hv = HilbertValue{*o->m, hilbert_function(*arr, *o->m, HilbertOptions{g.max_qm}).H};
        } else {
          throw UsageError("--m requires --H or --arr");
        }
      }
      std::optional<Rational> theta;
      std::string theta_source;
      if (!o->theta.empty()) {
        theta = parse_rational(o->theta);
        theta_source = "user";
      } else if (arr && hv) {
        theta = nochka_weights(codim_oracle(*arr)).theta;
        theta_source = "nochka weights of the arrangement";
      }
      const BoundsResult b = truncation_levels(p, hv, theta);
      Report r;
      r.json = header("bounds", g);
      r.json["params"] = Json{{"n", p.n}, {"degV", p.degV}, {"N", p.N}, {"q", p.q},
                              {"degrees", p.degrees}, {"epsilon", to_string(p.epsilon)}};
      r.json["d"] = b.d;
      r.json["delta"] = to_string(b.delta);
      r.json["m0"] = to_string(b.m0);
      r.json["m0_log10"] = b.m0_log10;
      r.json["q_m0"] = to_string(b.qm0);
      r.json["q_m0_log10"] = b.qm0_log10;
      Json lj = Json::array();
      for (const BigInt& x : b.Lj_bounds) lj.push_back(to_string(x));
      r.json["Lj_bounds"] = lj;
      if (b.Lj_exact) {
        Json ex = Json::array();
        for (const BigInt& x : *b.Lj_exact) ex.push_back(to_string(x));
        r.json["Lj_exact"] = ex;
      }
      if (b.threshold) {
        const ThresholdCheck& t = *b.threshold;
        r.json["threshold"] = Json{{"m", t.m},
                                   {"H", t.H},
                                   {"theta", to_string(t.theta)},
                                   {"theta_source", theta_source.empty() ? t.theta_source : theta_source},
                                   {"target", to_string(t.target)},
                                   {"first_lhs", to_string(t.first_lhs)},
                                   {"second_lhs", to_string(t.second_lhs)},
                                   {"first", t.first},
                                   {"second", t.second}};
      }
      return r;
    };
  });
}

// --- Nevanlinna commands ----------------------------------------------------

void add_jensen(CLI::App& app, Action* out) {
  struct Opts {
    std::string phi, radii = "2,4,8,16";
    double tol = 1e-6;
  };
  auto o = make_opts<Opts>();
  auto* sub = app.add_subcommand("jensen", "Constancy of the circle mean of log|phi| minus N_phi");
  sub->add_option("--phi", o->phi, "Entire function (polynomial or exponential sum)")->required();
  sub->add_option("--radii", o->radii, "Ascending radii >= 1");
  sub->add_option("--tol", o->tol, "Constancy tolerance");
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const ExpPoly phi = parse_exppoly(o->phi);
      const ConstancyReport c = jensen_check(phi, parse_radii(o->radii), quadrature(g));
      Report r;
      r.json = header("jensen", g);
      r.json["phi"] = phi.to_string();
      r.json["radii"] = c.radii;
      r.json["differences"] = c.differences;
      r.json["constant"] = c.constant;
      r.json["max_deviation"] = c.max_deviation;
      r.json["tolerance"] = o->tol;
      r.json["constant_within_tolerance"] = c.max_deviation <= o->tol;
      r.json["predicted"] = c.predicted ? Json(*c.predicted) : Json(nullptr);
      Table t{{"radius", "difference"}, {}};
      for (std::size_t i = 0; i < c.radii.size(); ++i) t.rows.push_back({num(c.radii[i]), num(c.differences[i])});
      r.table = t;
      r.status = c.max_deviation <= o->tol ? 0 : 4;
      return r;
    };
  });
}

void add_wronskian_check(CLI::App& app, Action* out) {
  auto o = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("wronskian-check", "Exact Wronskian divisor bound for a polynomial curve");
  sub->add_option("--curve", *o, "Curve file")->required();
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const Curve curve = load_curve(*o);
      if (!curve.is_polynomial()) throw DomainError("wronskian-check needs a polynomial curve");
      const WronskianDivisorReport w = wronskian_divisor_check(curve.polynomial_coords());
      Report r;
      r.json = header("wronskian-check", g);
      r.json["wronskian"] = w.wronskian.to_string("z");
      Json entries = Json::array();
      Table t{{"factor", "orders", "ord_product", "ord_wronskian", "lhs", "rhs"}, {}};
      for (const WronskianDivisorEntry& e : w.entries) {
        entries.push_back(Json{{"factor", e.factor.to_string("z")}, {"orders", e.orders},
                               {"ord_product", e.ord_product}, {"ord_wronskian", e.ord_wronskian},
                               {"lhs", e.lhs}, {"rhs", e.rhs}});
        std::string orders;
        for (std::size_t i = 0; i < e.orders.size(); ++i) orders += (i ? "," : "") + std::to_string(e.orders[i]);
        t.rows.push_back({e.factor.to_string("z"), orders, std::to_string(e.ord_product),
                          std::to_string(e.ord_wronskian), std::to_string(e.lhs), std::to_string(e.rhs)});
      }
      r.json["entries"] = entries;
      r.json["passed"] = w.passed;
      r.json["equality"] = w.equality;
      r.json["witness"] = w.witness;
      r.table = t;
      r.status = w.passed ? 0 : 4;
      return r;
    };
  });
}

void add_cartan_check(CLI::App& app, Action* out) {
  struct Opts {
    std::string curve, arr, hyperplanes, epsilon = "1", radii = "10,100,1000";
  };
  auto o = make_opts<Opts>();
  auto* sub = app.add_subcommand("cartan-check", "Both sides of the Cartan-Ru inequality");
  sub->add_option("--curve", o->curve, "Polynomial curve file")->required();
  auto* a = sub->add_option("--arr", o->arr, "Arrangement of hyperplanes");
  auto* h = sub->add_option("--hyperplanes", o->hyperplanes, "Coefficient rows 'a,b,c;d,e,f;...'");
  a->excludes(h);
  sub->add_option("--epsilon", o->epsilon, "Epsilon in (0, 1]");
  sub->add_option("--radii", o->radii, "Ascending radii >= 1");
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const Curve curve = load_curve(o->curve);
      std::vector<std::vector<Rational>> hs;
      if (!o->arr.empty()) {
        hs = hyperplanes_of(load_arrangement(o->arr, g));
      } else if (!o->hyperplanes.empty()) {
        hs = parse_hyperplanes(o->hyperplanes);
      } else {
        throw UsageError("cartan-check needs --arr or --hyperplanes");
      }
      const CartanReport c =
          cartan_ru_check(curve, hs, parse_epsilon(o->epsilon), parse_radii(o->radii), quadrature(g));
      Report r;
      r.json = header("cartan-check", g);
      r.json["family"] = c.family;
      r.json["wronskian"] = c.wronskian.to_string("z");
      Json rows = Json::array();
      Table t{{"requested_radius", "radius", "integral", "wronskian_count", "T", "lhs", "rhs", "slack"}, {}};
      for (const CartanRow& row : c.rows) {
        rows.push_back(Json{{"requested_radius", row.requested_radius}, {"radius", row.radius},
                            {"integral", row.integral}, {"wronskian_count", row.wronskian_count},
                            {"T", row.T}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"slack", row.slack}});
        t.rows.push_back({num(row.requested_radius), num(row.radius), num(row.integral),
                          num(row.wronskian_count), num(row.T), num(row.lhs), num(row.rhs), num(row.slack)});
      }
      r.json["rows"] = rows;
      r.json["caveat"] = c.caveat;
      r.table = t;
      return r;
    };
  });
}

void add_smt_report(CLI::App& app, Action* out) {
  struct Opts {
    std::string arr, curve, epsilon = "1", radii = "10,100,1000", truncation;
  };
  auto o = make_opts<Opts>();
  auto* sub = app.add_subcommand("smt-report", "Second Main Theorem sides with the FMT constancy check");
  sub->add_option("--arr", o->arr, "Arrangement file")->required();
  sub->add_option("--curve", o->curve, "Curve file")->required();
  sub->add_option("--epsilon", o->epsilon, "Epsilon in (0, 1]");
  sub->add_option("--radii", o->radii, "Ascending radii >= 1");
  sub->add_option("--truncation", o->truncation, "One level, or one per target; 'inf' for none");
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const Arrangement arr = load_arrangement(o->arr, g);
      const Curve curve = load_curve(o->curve);
      SmtOptions opts;
      opts.epsilon = parse_epsilon(o->epsilon);
      opts.radii = parse_radii(o->radii);
      opts.truncation = parse_truncation(o->truncation);
      opts.quadrature = quadrature(g);
      const SmtReport s = smt_report(curve, arr, opts);

      Report r;
      r.json = header("smt-report", g);
      r.json["mode"] = s.mode == SmtMode::Hyperplane ? "hyperplane" : "hypersurface";
      r.json["n"] = s.n;
      r.json["N"] = s.N;
      r.json["q"] = s.q;
      r.json["epsilon"] = to_string(s.epsilon);
      r.json["coefficient"] = s.coefficient;
      r.json["truncation"] = truncation_json(s.truncation);
      r.json["truncation_source"] = s.truncation_source;
      r.json["position"] = Json{{"condition_i", s.position_condition_i},
                                {"condition_ii_proxy", s.position_condition_ii_proxy}};
      Json rows = Json::array();
      Table t{{"requested_radius", "radius", "T", "lhs", "rhs", "slack"}, {}};
      for (const SmtRadiusRow& row : s.rows) {
        Json targets = Json::array();
        for (const SmtTargetRow& tr : row.targets) {
          targets.push_back(Json{{"counting_truncated", tr.counting_truncated}, {"counting", tr.counting},
                                 {"proximity", tr.proximity}, {"fmt", tr.fmt}});
        }
        rows.push_back(Json{{"requested_radius", row.requested_radius}, {"radius", row.radius}, {"T", row.T},
                            {"lhs", row.lhs}, {"rhs", row.rhs}, {"slack", row.slack}, {"targets", targets}});
        t.rows.push_back({num(row.requested_radius), num(row.radius), num(row.T), num(row.lhs), num(row.rhs),
                          num(row.slack)});
      }
      r.json["rows"] = rows;
      r.json["fmt_constant"] = s.fmt_constant;
      r.json["fmt_max_deviation"] = s.fmt_max_deviation;
      r.json["fmt_worst_deviation"] = s.fmt_worst_deviation;
      r.json["caveats"] = s.caveats;
      r.table = t;
      return r;
    };
  });
}

// --- fixtures -------------------------------------------------------------------

void add_gen_fixture(CLI::App& app, Action* out) {
  struct Opts {
    std::string dir;
    int max_attempts = 100;
  };
  auto o = make_opts<Opts>();
  auto* sub = app.add_subcommand("gen-fixture", "Twelve-curve arrangement in P^2 in 3-subgeneral position");
  sub->add_option("--out-dir", o->dir, "Write intro.arr, intro_exp.curve and intro.manifest.json here");
  sub->add_option("--max-attempts", o->max_attempts, "Redraws before giving up")->check(CLI::PositiveNumber);
  sub->callback([o, out] {
    *out = [o](const GlobalConfig& g) {
      const IntroFixture fx = generate_intro_fixture(g.seed, o->max_attempts);
      const Arrangement& arr = fx.arrangement;
      std::ostringstream arr_text;
      write_arrangement(arr_text, arr);

      Curve curve;
      curve.coords = {parse_exppoly("1"), parse_exppoly("exp(z)"), parse_exppoly("exp(z^2)")};
      std::ostringstream curve_text;
      write_curve(curve_text, curve);

      const int coefficient = arr.q() - 2 * arr.N + arr.n - 1;
      Json manifest{{"schema", "nochka.fixture/1"},
                    {"name", "intro"},
                    {"seed", g.seed},
                    {"arrangement", "intro.arr"},
                    {"curve", "intro_exp.curve"},
                    {"expected",
                     {{"q", {{"value", arr.q()}, {"tag", "PAPER"}}},
                      {"degrees", {{"value", arr.degrees()}, {"tag", "PAPER"}}},
                      {"coefficient", {{"value", coefficient}, {"tag", "PAPER"}}},
                      {"condition_i", {{"value", fx.position.condition_i}, {"tag", "DERIVED"}}},
                      {"condition_ii_proxy", {{"value", fx.position.condition_ii}, {"tag", "DERIVED"}}}}}};

      if (!o->dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(o->dir);
        const auto write = [&](const std::string& name, const std::string& text) {
          std::ofstream f(fs::path(o->dir) / name);
          if (!f) throw UsageError("cannot write into '" + o->dir + "'");
          f << text;
        };
        write("intro.arr", arr_text.str());
        write("intro_exp.curve", curve_text.str());
        write("intro.manifest.json", manifest.dump(2) + "\n");
      }
      Report r;
      r.json = header("gen-fixture", g);
      r.json["attempts"] = fx.attempts;
      r.json["q"] = arr.q();
      r.json["degrees"] = arr.degrees();
      r.json["coefficient"] = coefficient;
      r.json["condition_i"] = fx.position.condition_i;
      r.json["condition_ii_proxy"] = fx.position.condition_ii;
      r.json["arrangement"] = arr_text.str();
      r.json["curve"] = curve_text.str();
      r.json["manifest"] = manifest;
      r.json["out_dir"] = o->dir;
      return r;
    };
  });
}

}  // namespace

void register_commands(CLI::App& app, Action* out) {
  add_validate_rank(app, out);
  add_weights(app, out);
  add_filtration(app, out);
  add_greedy(app, out);
  add_position_check(app, out);
  add_oracle_dump(app, out);
  add_hilbert(app, out);
  add_hilbert_weight(app, out);
  add_bounds(app, out);
  add_jensen(app, out);
  add_wronskian_check(app, out);
  add_cartan_check(app, out);
  add_smt_report(app, out);
  add_gen_fixture(app, out);
}

}  // namespace nochka::cli
