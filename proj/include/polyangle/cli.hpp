#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyangle::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kShapeMisuse = 3,
  kIoError = 4,
};

/// Runs the command line with `args` (excluding the program name), writing
/// reports to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyangle::cli
