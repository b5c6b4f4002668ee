#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cumulant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kMaxWeightCap = 10;

/// Runs one batch job. args excludes the program name. The JSON report goes
/// to --output when given; stdout receives the JSON report (--format json,
/// the default) or its plain-text rendering (--format text).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cumulant::cli
