#pragma once

#include <iosfwd>

namespace catalysim::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kPropertyFailure = 1, // a property fails, or the machine broke its promise
    kUsage = 2,           // bad flags, unreadable machine file, bad arguments
};

/// Entry point shared by the executable and the tests. Results go to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace catalysim::cli
