#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lexeval::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;  // bad flags, unreadable or unwritable files
inline constexpr int kExitData = 3;   // input records that fail validation

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexeval::cli
