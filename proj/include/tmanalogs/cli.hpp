#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tmanalogs::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kViolation = 1;
inline constexpr int kUsage = 2;

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tmanalogs::cli
