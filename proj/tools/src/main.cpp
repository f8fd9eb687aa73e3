#include <iostream>
#include <string>
#include <vector>

#include "polycat_cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return polycat::cli::run_command(args, std::cout, std::cerr);
}
