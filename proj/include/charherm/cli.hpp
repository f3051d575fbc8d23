#ifndef CHARHERM_CLI_HPP_
#define CHARHERM_CLI_HPP_

#include <iosfwd>

namespace charherm {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitNoConvergence = 2,
};

/// Runs `<tool> <group> <action> --flag value ...`, writing the result table
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charherm

#endif  // CHARHERM_CLI_HPP_
