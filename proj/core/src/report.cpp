#include "matriple/report.hpp"

namespace matriple {

bool SuiteReport::pass() const {
  for (const PropertyRecord& p : properties) {
    if (!p.passed()) return false;
  }
  return true;
}

long SuiteReport::total_failures() const {
  long total = 0;
  for (const PropertyRecord& p : properties) {
    total += p.failures;
  }
  return total;
}

}  // namespace matriple
