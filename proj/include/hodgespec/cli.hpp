#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgespec {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotIsospectral = 1,
  kExitParseError = 2,
  kExitComputationError = 3,
  kExitRecoveryError = 4,
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the --output file), errors to `err` as one JSON object.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hodgespec
