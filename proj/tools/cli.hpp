#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qeuler::cli {

// Exit statuses shared by every subcommand.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;  // verification failure or internal invariant
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qeuler::cli
