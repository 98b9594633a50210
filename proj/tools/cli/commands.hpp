#ifndef FOCKU_CLI_COMMANDS_HPP
#define FOCKU_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace focku::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitSuiteFailure = 1,
    kExitUsage = 2,
    kExitPrecondition = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go to `out`
/// only when the command completes; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace focku::cli

#endif
