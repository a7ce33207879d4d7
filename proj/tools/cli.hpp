#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace formred::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kRealRoot = 2,
    kOptimizer = 3,
};

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and error messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace formred::cli
