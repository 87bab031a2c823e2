#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toyscatter::cli {

enum ExitCode : int {
  kOk = 0,
  kInconsistent = 1,
  kUsage = 2,
};

/// Runs one command line (args excludes the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toyscatter::cli
