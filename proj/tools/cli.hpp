#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace evenum::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kGuardRefusal = 2,
  kVerificationFailure = 3,
};

/// Parses args (without the program name) and runs the chosen subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evenum::cli
