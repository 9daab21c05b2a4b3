#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace systole::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kSuccess = 0, kMathFailure = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name), writing data
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace systole::cli
