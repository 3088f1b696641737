#pragma once

#include <filesystem>
#include <ostream>

#include "cli/run_config.hpp"

namespace confalg::cli {

/// Exit codes shared by all verbs.
enum ExitCode : int {
  kOk = 0,
  kValidationFailed = 1,
  kParseError = 2,
  kPreconditionFailed = 3,
  kStabilityMismatch = 4,
};

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err);
int cmd_stability(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace confalg::cli
