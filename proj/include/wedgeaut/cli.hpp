#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace wedgeaut::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kUsageError = 2,
    kReducibilityUndetermined = 3,
    kTableError = 4,
};

/// Runs the command line (arguments without the program name). The report
/// goes to `out`, every diagnostic to `err`.
///
///   wedgeaut [--json] [--explain] [--table PATH] [--max-weight N]
///            [--assume-reducible] EXPR
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace wedgeaut::cli
