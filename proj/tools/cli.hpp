#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlag::tools {

// Stable exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitInputError = 2,
  kExitResourceCap = 3,
};

// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperlag::tools
