#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default tolerance for `verify`.
inline constexpr const char* kToleranceEnv = "BINOM_TOLERANCE";

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Regular output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binom::cli
