#pragma once

#include <string>
#include <vector>

namespace castle::cli {

struct Result {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kZero = 2;

// Parses `args` (without the program name) and runs the subcommand.
Result run(const std::vector<std::string>& args);

}  // namespace castle::cli
