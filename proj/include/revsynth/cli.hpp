#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revsynth {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInputError = 2 };

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace revsynth
