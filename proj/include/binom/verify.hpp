// Self-check suites grouped by the identity they exercise.  The CLI's
// `verify` subcommand is a thin wrapper over run_verification.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "binom/hilbert.hpp"

namespace binom {

struct VerifyConfig {
  /// Scales every residual threshold: a check whose nominal bound is b
  /// passes when its residual is <= b * tolerance / 1e-10.
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 20240607;
  /// When set (>= 0), groups that sweep N use only this value.
  int max_photons = -1;
  /// Empty means every group.
  std::vector<std::string> groups;
};

struct CheckResult {
  std::string name;
  double value;
  double threshold;
  /// true: pass iff value <= threshold; false: pass iff value >= threshold.
  bool upper_bound;
  bool passed;
};

struct GroupResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyReport {
  double tolerance;
  std::uint64_t seed;
  std::vector<GroupResult> groups;
  bool passed() const;
};

/// orthogonality, overlap, rotation, algebra, completeness, delta,
/// squeezing, bijection, appendix, coherent.
const std::vector<std::string>& verify_group_names();

/// Throws std::invalid_argument for an unknown group or tolerance <= 0.
VerifyReport run_verification(const VerifyConfig& config);

nlohmann::json report_to_json(const VerifyReport& report);

}  // namespace binom
