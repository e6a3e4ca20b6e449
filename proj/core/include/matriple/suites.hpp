#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "matriple/extremal.hpp"
#include "matriple/fixture.hpp"
#include "matriple/report.hpp"

namespace matriple {

enum class Suite { Module, Axioms, Ball, Extreme };

std::string to_string(Suite s);
std::optional<Suite> suite_from_string(std::string_view s);

/// Deliberate defects injectable into the suite evaluation paths.  Used by
/// the mutation-sensitivity checks to show the suites are non-vacuous;
/// Fault::None routes through the production code untouched.
enum class Fault { None, TripleSignFlip, BergmannSqrtSkip };

std::string to_string(Fault f);
std::optional<Fault> fault_from_string(std::string_view s);

struct SuiteConfig {
  std::vector<ModuleSpace> dims = default_dims();
  long trials = 100;
  std::uint64_t seed = 42;
  ToleranceConfig tolerances;
  std::set<Suite> suites = {Suite::Module, Suite::Axioms, Suite::Ball,
                            Suite::Extreme};
  /// Directory for witness fixtures of failing trials; empty disables
  /// witness files.
  std::filesystem::path fixtures_dir;
  Fault fault = Fault::None;

  static std::vector<ModuleSpace> default_dims();

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

/// Gaussian draw rescaled to module norm r, r uniform on [0, 0.95].
BallPoint generate_ball_point(ModuleSpace space, Rng& rng,
                              const ToleranceConfig& tol);

/// Runs every selected suite over every dimension pair with `trials`
/// random instances per property.  Per-trial generator state is derived
/// from (seed, property, dim, trial), so records are order-independent
/// and two runs of the same config agree except for wall time.
SuiteReport run_suites(const SuiteConfig& config);

void print_text(std::ostream& out, const SuiteConfig& config,
                const SuiteReport& report);
std::string report_json(const SuiteConfig& config, const SuiteReport& report);

struct ReplayResult {
  std::string property;
  std::string dim;
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

/// Re-evaluates the property named in a witness file on the inputs stored
/// in it.  Throws ParseError when the file does not name a property or
/// the inputs do not match the property's shape.
ReplayResult replay_witness(const std::filesystem::path& file,
                            const ToleranceConfig& tol,
                            Fault fault = Fault::None);

}  // namespace matriple
