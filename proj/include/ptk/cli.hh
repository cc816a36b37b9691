#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptk {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitError = 2,
  kExitUnknown = 3,
};

/// Runs one command line (without the program name). Automaton files named
/// "-" are read from `in`; reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ptk
