#pragma once

#include <cstdint>
#include <iosfwd>

namespace plethax {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerificationFailed = 2 };

/// Pair budget from PLETHAX_BUDGET, or `fallback` when unset. Throws
/// std::invalid_argument on a malformed value.
std::uint64_t budget_from_env(std::uint64_t fallback);

/// Entry point of the `plethax` tool: subcommands expand, sgn, trace and
/// verify. Errors print one line to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plethax
