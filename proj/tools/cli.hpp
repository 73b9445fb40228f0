#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gwht::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kBudgetError = 2,
};

/// Runs one command line (without the program name). Output that a caller
/// would pipe goes to `out`; diagnostics and warnings go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gwht::cli
