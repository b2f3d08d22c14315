#pragma once

#include <ostream>

namespace bfvd {

/// Exit statuses of the command-line front end.
enum ExitStatus : int {
    kExitOk = 0,
    kExitUsage = 2,      // bad flags, unreadable or malformed input
    kExitContract = 3,   // precondition or integrity failure
    kExitTimeout = 4,
};

/// Subcommands: solve, kernelize, enumerate, stats, charm-table, reduce-bdd,
/// bench, selftest. Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bfvd
