#include <iostream>
#include <string>
#include <vector>

#include "subsmooth/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return subsmooth::cli::run_cli(args, std::cout, std::cerr);
}
