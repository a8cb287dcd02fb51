#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhom::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, unsupported = 3 };

/// Runs the command line `args` (without the program name); returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhom::cli
