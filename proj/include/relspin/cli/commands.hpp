#pragma once

#include <iosfwd>

namespace relspin::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_failure = 1, ///< verification or integration failure
    exit_usage = 2,   ///< bad arguments or malformed input files
};

/// Entry point shared by the executable and the tests. Data goes to out,
/// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace relspin::cli
