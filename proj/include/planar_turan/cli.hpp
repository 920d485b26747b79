#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planar_turan {

/// Exit codes of the planar-turan tool.
enum ExitCode : int { kExitOk = 0, kExitFails = 1, kExitUsage = 2, kExitBudget = 3 };

/// Runs the command line (without the program name). Normal output goes to
/// out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planar_turan
