#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace casimir::cli {

enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns the exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
