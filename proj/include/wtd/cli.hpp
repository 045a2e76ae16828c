#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wtd {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kExitYes = 0,
  kExitNo = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Runs one command; `args` excludes the program name. JSON payloads go to
/// `out` (exit 0/1), diagnostics to `err` (exit 2/3).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wtd
