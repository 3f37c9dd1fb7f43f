#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcalc {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolated = 1,  ///< an identity or solver check found a counterexample
  kExitUsage = 2,     ///< usage, parse or input error
};

/// Runs the command line `args` (args[0] is the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qcalc
