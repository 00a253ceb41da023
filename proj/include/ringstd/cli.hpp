#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringstd {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitBudget = 2, kExitCertificate = 3 };

/// Runs `ringstd <args...>`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringstd
