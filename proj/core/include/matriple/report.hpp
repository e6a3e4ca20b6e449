#pragma once

#include <optional>
#include <string>
#include <vector>

namespace matriple {

/// Result of one property over one dimension pair.
struct PropertyRecord {
  std::string suite;
  std::string name;
  std::string law;  // the identity or bound the property checks
  std::string dim;  // "mxn"
  long trials_run = 0;
  long failures = 0;
  double worst_residual = 0.0;
  double threshold = 0.0;
  std::optional<std::string> witness;  // fixture path of the first failure

  bool passed() const { return failures == 0; }
};

struct SuiteReport {
  std::vector<PropertyRecord> properties;
  double wall_time_seconds = 0.0;

  bool pass() const;
  long total_failures() const;
};

}  // namespace matriple
