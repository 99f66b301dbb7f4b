#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace haga::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Subcommands:
/// classify, build, verify, sweep, figure, construct-squares.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace haga::cli
