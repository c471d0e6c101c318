#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hlx {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // verification mismatch, I/O
  kExitUsage = 2,
  kExitRange = 3,
  kExitInadmissible = 4,
};

// Runs the `hlx` command line. args[0] is the program name. Table output goes
// to `out` unless --output is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlx
