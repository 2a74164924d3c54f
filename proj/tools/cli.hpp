#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "detineq/error.hpp"

namespace detineq::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kViolation = 1,    ///< a mathematical property failed (an implementation bug)
    kInputError = 2,   ///< bad flags, unreadable or malformed files
    kPrecondition = 3, ///< input parsed but violates a precondition (not PSD/PD, unsorted d, ...)
    kNumerical = 4,    ///< numerical non-convergence
};

/// Exit status for a library error raised while running a command.
int exit_code_for(ErrorKind kind) noexcept;

/// Runs one command line (args excludes the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace detineq::cli
