#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reiscfg {

// Exit codes: 0 success / all checks passed; 1 a verification mismatch was
// found; 2 invalid arguments or domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand (count | enumerate | tables | verify). args excludes
// the program name. All output goes to the supplied streams.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reiscfg
