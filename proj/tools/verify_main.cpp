// Verification harness for the matrix-module triple library: runs the
// property suites over a grid of module dimensions with seeded random
// instances, reports per-property results as text or JSON, writes failing
// instances as witness fixtures and can replay one.
//
// Exit codes: 0 all properties passed, 1 property failure, 2 bad
// configuration or unreadable input.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matriple/suites.hpp"

namespace {

std::vector<matriple::ModuleSpace> parse_dims(const std::string& text) {
  std::vector<matriple::ModuleSpace> dims;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    matriple::ModuleSpace d;
    char sep = 0;
    std::istringstream pair(item);
    if (!(pair >> d.rows >> sep >> d.cols) || sep != 'x' || d.rows < 1 ||
        d.cols < 1 || (pair >> sep)) {
      throw CLI::ValidationError("--dims", "expected 'MxN[,MxN...]', got '" +
                                               item + "'");
    }
    dims.push_back(d);
  }
  if (dims.empty()) {
    throw CLI::ValidationError("--dims", "no dimension pairs given");
  }
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "matriple-verify: property-based verification of the canonical "
      "triple-product, Bergmann and transvection structure on matrix "
      "modules"};

  std::string dims_spec = "1x1,2x2,3x2,2x3,4x1";
  long trials = 100;
  std::uint64_t seed = 42;
  double tol_scale = 0.0;
  std::vector<std::string> suite_names;
  std::string format = "text";
  std::string fixtures_dir = "witnesses";
  std::string check_file;
  std::string fault_name = "none";

  app.add_option("--dims", dims_spec,
                 "comma-separated module dimensions, e.g. 2x2,3x2");
  app.add_option("--trials", trials, "random instances per property and dim")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "base seed for all derived generators");
  app.add_option("--tol", tol_scale,
                 "absolute tolerance; composed = 100*tol, eig_clip = tol/100")
      ->check(CLI::PositiveNumber);
  app.add_option("--suite", suite_names,
                 "suite to run: module|axioms|ball|extreme|all (repeatable)")
      ->check(CLI::IsMember({"module", "axioms", "ball", "extreme", "all"}));
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--fixtures", fixtures_dir,
                 "directory for witness fixtures ('' disables them)");
  app.add_option("--check", check_file, "replay a single witness fixture");
  app.add_option("--inject-fault", fault_name,
                 "(testing) deliberately break one formula: "
                 "none|triple-sign-flip|bergmann-sqrt-skip")
      ->check(CLI::IsMember({"none", "triple-sign-flip", "bergmann-sqrt-skip"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  matriple::SuiteConfig config;
  try {
    config.dims = parse_dims(dims_spec);
    config.trials = trials;
    config.seed = seed;
    if (tol_scale > 0.0) {
      config.tolerances = matriple::ToleranceConfig::scaled(tol_scale);
    }
    if (!suite_names.empty()) {
      config.suites.clear();
      for (const std::string& name : suite_names) {
        if (name == "all") {
          config.suites = {matriple::Suite::Module, matriple::Suite::Axioms,
                           matriple::Suite::Ball, matriple::Suite::Extreme};
          break;
        }
        config.suites.insert(*matriple::suite_from_string(name));
      }
    }
    config.fixtures_dir = fixtures_dir;
    config.fault = *matriple::fault_from_string(fault_name);
    config.validate();
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  if (!check_file.empty()) {
    try {
      matriple::ReplayResult r = matriple::replay_witness(
          check_file, config.tolerances, config.fault);
      std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.property << "  "
                << r.dim << "  residual=" << r.residual
                << " threshold=" << r.threshold << "\n";
      return r.passed ? 0 : 1;
    } catch (const matriple::ParseError& e) {
      std::cerr << "configuration error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "replay error: " << e.what() << "\n";
      return 2;
    }
  }

  matriple::SuiteReport report;
  try {
    report = matriple::run_suites(config);
  } catch (const std::exception& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  if (format == "json") {
    std::cout << matriple::report_json(config, report) << "\n";
  } else {
    matriple::print_text(std::cout, config, report);
  }
  return report.pass() ? 0 : 1;
}
