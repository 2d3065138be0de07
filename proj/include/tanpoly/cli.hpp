#ifndef TANPOLY_CLI_HPP
#define TANPOLY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace tanpoly {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_disagreement = 1,
    exit_usage = 2,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code. Regular output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tanpoly

#endif
