#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lampctl {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kConfigError = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line. Reports go to `out` unless --out names a file;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lampctl
