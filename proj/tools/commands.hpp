#pragma once

// Subcommands of the `acm` executable.

#include <iosfwd>
#include <string>
#include <vector>

namespace acm::cli {

/// Exit codes: 0 success, 2 indices reported outside their certified range,
/// 1 on any error (including a failed certification).
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUncertified = 2;

/// Parses `args` (without the program name) and runs one subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acm::cli
