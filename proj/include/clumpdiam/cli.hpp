#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clumpdiam {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerification = 2 };

/// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "CLUMPDIAM_WORKERS";

/// Runs one subcommand. args excludes the program name. The artifact goes to
/// out (or the --output file), diagnostics to err. A verification failure
/// emits a JSON witness whatever the requested format.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clumpdiam
