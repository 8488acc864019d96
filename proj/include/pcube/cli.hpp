#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcube {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,       // success, or the checked property holds
  kExitFalse = 1,    // the checked property does not hold
  kExitUsage = 2,    // bad arguments or malformed data
};

/// Runs the `pcube` command line (without the program name). Reports go to
/// `out`, diagnostics and timings to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcube
