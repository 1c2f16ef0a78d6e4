#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bigramsey::cli {

enum ExitCode : int {
  kOk = 0,
  kMalformedInput = 1,
  kResourceLimit = 2,
  kInvariantViolation = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bigramsey::cli
