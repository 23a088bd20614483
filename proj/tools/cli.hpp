#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permdex::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternal = 1,
  kUsage = 2,
  kInputFormat = 3,
  kConstraint = 4,
  kDecodeFailure = 5,
};

/// Runs one command line (without the program name). "-" as a file
/// argument means `in` / `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace permdex::cli
