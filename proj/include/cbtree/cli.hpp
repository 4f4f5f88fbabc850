#pragma once

#include <iosfwd>

namespace cbtree {

/// Exit codes of the command line tool.
enum ExitCode : int { kExitOk = 0, kExitLawFailure = 1, kExitUsage = 2, kExitProbeMismatch = 3 };

/// `cbtree <expr-or-@file> <command> [argument] [options]`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace cbtree
