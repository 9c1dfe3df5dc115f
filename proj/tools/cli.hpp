#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rtdsp::cli {

/// Exit codes: 0 success, 1 runtime failure (I/O, bad WAV), 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Data goes to files
/// or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rtdsp::cli
