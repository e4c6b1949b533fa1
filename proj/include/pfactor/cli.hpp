#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfactor {

enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitCap = 2, kExitTheorem = 3 };

/// Runs one command line (without the program name). Output goes to out,
/// notices and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfactor
