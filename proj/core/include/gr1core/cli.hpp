#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gr1core {

/// Exit codes of the command-line interface.
enum ExitCode : int {
  exit_ok = 0,
  exit_unrealizable = 1,   // `check` on an unrealizable specification
  exit_parse_error = 2,    // syntax/type/prime/duplicate/empty input
  exit_realizable_input = 3,  // core commands need an unrealizable spec
  exit_timeout = 4,        // all-cores run hit the timeout (partial output)
};

/// Runs one CLI invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gr1core
