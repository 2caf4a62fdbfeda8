#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidity::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitRangeError = 3;

/// Runs one command line (args[0] is the program name). Normal output goes to
/// `out`; every failure writes exactly one diagnostic line to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigidity::cli
