#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cumulant {

/// Outcome of one exact identity check. On failure, witness holds the factor
/// names of the first offending monomial (or a single generator name).
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::vector<std::string> witness;
  std::string detail;
  int checked = 0;
};

inline bool all_passed(std::span<const CheckReport> reports) {
  for (const auto& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace cumulant
