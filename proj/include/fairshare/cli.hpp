#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fairshare::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kSuccess = 0,
    kInfeasible = 1,
    kInvalidInput = 2,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fairshare::cli
