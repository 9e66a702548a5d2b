#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace npvsched::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kDataError = 2,
  /// oracle-check ran but a solver missed the optimum.
  kCheckFailed = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, usage text and log lines to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace npvsched::cli
