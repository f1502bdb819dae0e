#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jonq::cli {

enum ExitCode : int { kSuccess = 0, kInvalid = 1, kUnresolved = 2 };

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jonq::cli
