#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfloop::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitParse = 2;

/// Runs the command line `args` (without the program name). Loop lines are read
/// from `--input` or, by default, from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace selfloop::cli
