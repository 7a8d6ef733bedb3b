#include <cmath>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace nochka::cli {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  return in;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const Json& v, const std::string& prefix, std::ostringstream& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "." + std::to_string(i), out);
  } else {
    out << prefix << '\t' << scalar_text(v) << '\n';
  }
}

}  // namespace

Json settings_json(const GlobalConfig& g) {
  const QuadratureOptions q = quadrature(g);
  const ZeroOptions z;
  return Json{{"seed", g.seed},
              {"budget_gb_steps", g.budget_gb_steps},
              {"max_qm", g.max_qm},
              {"quad_tol", q.tol},
              {"quad_min_points_log2", q.min_k},
              {"quad_max_points_log2", q.max_k},
              {"zero_merge_tol", z.merge_tol},
              {"zero_min_box", z.min_box},
              {"zero_max_attempts", z.max_attempts}};
}

Json rational_list(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const Rational& x : xs) out.push_back(to_string(x));
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t') {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && parts[0].empty()) parts.clear();
  return parts;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& s : split(text, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("not an integer: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& s : split(text, ',')) out.push_back(parse_rational(s));
  return out;
}

std::vector<double> parse_radii(const std::string& text) {
  std::vector<double> out;
  for (const std::string& s : split(text, ',')) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) throw UsageError("not a radius: '" + s + "'");
    if (v < 1) throw UsageError("radii must be >= 1");
    if (!out.empty() && v <= out.back()) throw UsageError("radii must be strictly ascending");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("at least one radius is required");
  return out;
}

Rational parse_epsilon(const std::string& text) {
  const Rational eps = parse_rational(text);
  if (sgn(eps) <= 0 || eps > 1) throw UsageError("epsilon must lie in (0, 1]");
  return eps;
}

RankOracle load_oracle(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_rank_oracle(in);
}

Arrangement load_arrangement(const std::string& path, const GlobalConfig& g) {
  std::ifstream in = open_input(path);
  Arrangement arr = read_arrangement(in);
  arr.groebner.max_steps = g.budget_gb_steps;
  return arr;
}

Curve load_curve(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_curve(in);
}

QuadratureOptions quadrature(const GlobalConfig& g) {
  QuadratureOptions q;
  q.tol = g.quad_tol;
  return q;
}

std::string tsv(const Report& report) {
  std::ostringstream out;
  if (report.table) {
    const auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
      out << '\n';
    };
    line(report.table->header);
    for (const auto& row : report.table->rows) line(row);
  } else {
    flatten(report.json, "", out);
  }
  return out.str();
}

}  // namespace nochka::cli
