#include <fstream>
#include <iostream>

#include "cli.hpp"

using namespace nochka;
using namespace nochka::cli;

namespace {

constexpr int kParse = 2;
constexpr int kResource = 3;
constexpr int kAssertion = 4;

int fail(int code, const char* kind, const std::exception& e) {
  std::cerr << "nochka: " << kind << ": " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nochka weights, Hilbert data and Nevanlinna checks for hypersurface arrangements", "nochka"};
  app.require_subcommand(1);
  GlobalConfig g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--budget-gb-steps", g.budget_gb_steps, "Groebner basis reduction budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--quad-tol", g.quad_tol, "Quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-qm", g.max_qm, "Largest q_m for Hilbert computations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("-o,--output", g.output, "Write the report to this file");
  app.fallthrough();

  Action action;
  register_commands(app, &action);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    const Report report = action(g);
    const std::string text = g.format == "tsv" ? tsv(report) : report.json.dump(2) + "\n";
    if (g.output.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(g.output);
      if (!f) throw UsageError("cannot write '" + g.output + "'");
      f << text;
    }
    return report.status;
  } catch (const UsageError& e) {
    return fail(kParse, "usage error", e);
  } catch (const ParseError& e) {
    return fail(kParse, "parse error", e);
  } catch (const ResourceError& e) {
    return fail(kResource, "resource budget exceeded", e);
  } catch (const AssertionFailure& e) {
    return fail(kAssertion, "assertion failed", e);
  } catch (const DomainError& e) {
    return fail(kAssertion, "domain error", e);
  }
}
