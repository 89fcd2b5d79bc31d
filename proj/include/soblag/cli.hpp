#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace soblag {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one command line (program name excluded). Normal output goes to `out`,
/// diagnostics and usage errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace soblag
