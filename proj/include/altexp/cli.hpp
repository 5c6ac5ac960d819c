#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace altexp {

/// Exit codes of the command-line tool.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (eval, forward, inverse, interpolate, verify).
/// `args` excludes the program name. Results go to `out` unless --output
/// names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altexp
