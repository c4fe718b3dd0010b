#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace k4st::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseFailure = 2,
  kInfeasibleExit = 3,
  kMinorFoundExit = 4,
  kOracleMismatch = 5,
};

/// Runs `k4st <args...>` (args excludes the program name), writing reports
/// to `out` and diagnostics to `err`. Standard input is read when a path
/// is "-".
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace k4st::cli
