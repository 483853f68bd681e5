#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plint::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadParameters = 2, kDivergent = 3 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plint::cli
