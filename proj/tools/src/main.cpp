#include <iostream>

#include "wforge_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wforge::cli::run(args, std::cout, std::cerr);
}
