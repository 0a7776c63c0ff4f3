#pragma once

#include <ostream>

namespace hopfdiag::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBound = 2, kCheckFailed = 3 };

/// Runs the hopfdiag command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hopfdiag::cli
