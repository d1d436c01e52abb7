#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const castle::cli::Result r = castle::cli::run(args);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
