#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return effspec::cli::run(args, std::cout, std::cerr, std::getenv("EFFSPEC_MAX_N"));
}
