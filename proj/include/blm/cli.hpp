#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blm {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFailure = 3;

// Runs one subcommand: generate | shuffle | split | validate | stats.
// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blm
