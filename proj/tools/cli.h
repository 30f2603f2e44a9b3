#ifndef TOPPKIT_TOOLS_CLI_H_
#define TOPPKIT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace toppkit::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;
// Oracle and solver disagree beyond the oracle tolerance.
inline constexpr int kExitDisagreement = 3;

// Runs one command line (args[0] is the program name) and returns the exit
// code. Normal output goes to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace toppkit::cli

#endif  // TOPPKIT_TOOLS_CLI_H_
