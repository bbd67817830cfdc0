#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spp {

/// Process exit codes of the `spp` tool.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitTimeout = 2,
  kExitUsage = 64,
  kExitData = 65,
};

/// Runs the command line `args` (args[0] is the program name) with the
/// subcommands solve, oracle, gen and bench. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spp
