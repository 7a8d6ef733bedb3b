#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nochka/errors.hpp"
#include "nochka/geometry.hpp"
#include "nochka/nevanlinna.hpp"
#include "nochka/rank_core.hpp"

namespace nochka::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "nochka.report/1";

/// Bad option values that CLI11 cannot catch; mapped to the parse exit code.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalConfig {
  std::string format = "json";
  std::uint64_t seed = 1;
  std::size_t budget_gb_steps = GroebnerOptions{}.max_steps;
  double quad_tol = QuadratureOptions{}.tol;
  long max_qm = HilbertOptions{}.max_qm;
  std::string output;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json json;
  std::optional<Table> table;  // TSV rendering; otherwise the JSON is flattened
  int status = 0;              // 4 when a verified property fails
};

using Action = std::function<Report(const GlobalConfig&)>;

/// Registers every subcommand on app; the chosen one stores its action in *out.
void register_commands(CLI::App& app, Action* out);

// Helpers shared by the command implementations.
Json settings_json(const GlobalConfig& g);
Json rational_list(const std::vector<Rational>& xs);
std::vector<std::string> split(const std::string& text, char sep);
std::vector<int> parse_int_list(const std::string& text);
std::vector<Rational> parse_rational_list(const std::string& text);
std::vector<double> parse_radii(const std::string& text);
Rational parse_epsilon(const std::string& text);
RankOracle load_oracle(const std::string& path);
Arrangement load_arrangement(const std::string& path, const GlobalConfig& g);
Curve load_curve(const std::string& path);
QuadratureOptions quadrature(const GlobalConfig& g);
std::string tsv(const Report& report);

}  // namespace nochka::cli
