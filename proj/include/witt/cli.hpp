#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace witt::cli {

enum ExitCode : int {
  kSuccess = 0,
  /// Domain rejection (not a Jacobi tuple, parse error) or failed verification.
  kRejected = 1,
  kUsage = 2,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace witt::cli
