#pragma once

#include <iosfwd>

namespace hypersum {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNoSolution = 1,
    kExitInputError = 2,
};

/// Runs the command-line tool. Results go to out, diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypersum
