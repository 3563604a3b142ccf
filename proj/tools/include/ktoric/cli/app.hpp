#pragma once

#include <ostream>

namespace ktoric::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kRefused = 2,
    kNegative = 3,
};

/// Runs one command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace ktoric::cli
