#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace gsqg::cli {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  unsigned seed = 0;
  int jobs = 1;
  /// Mutation hook: every F value used by the checks has its sign flipped.
  bool flip_f_sign = false;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string summary;
  nlohmann::json details;
  double seconds = 0.0;
};

struct VerifyReport {
  std::string level;
  std::vector<CheckResult> checks;
  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Check names in run order for a level.
std::vector<std::string> verify_check_names(VerifyLevel level);

VerifyReport run_verify(const VerifyOptions& options);

std::string to_string(VerifyLevel level);

}  // namespace gsqg::cli
