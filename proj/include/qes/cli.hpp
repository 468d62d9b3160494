#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qes/spectrum.hpp"

namespace qes::cli {

/// Exit codes: 0 ok, 1 usage/input error, 2 verification failure,
/// 3 solver non-convergence.
enum ExitCode : int { kOk = 0, kUsageError = 1, kVerifyFailure = 2, kNoConvergence = 3 };

struct CommonArgs {
  std::string command;
  std::optional<std::string> preset;
  std::optional<std::string> spec_text;  // inline JSON or a file path
  int levels = 0;
  std::map<std::string, double> params;
  int starts = -1;
  std::uint64_t rng_seed = 0;
  std::optional<GridSpec> grid;
  std::optional<std::string> out;
  std::string format = "json";
  double magnify = 1.0;
  int n_max = 4;
};

struct CommandResult {
  int exit_code = kOk;
  std::string output;  // stdout payload (JSON or CSV)
  std::vector<std::string> files_written;
};

/// Dispatches classify | build | solve | verify | states | extended |
/// plot-data. Throws std::invalid_argument for unusable inputs (mapped to
/// exit code 1 by the binary).
CommandResult run_command(const CommonArgs& args);

}  // namespace qes::cli
