#include <iostream>
#include <string>
#include <vector>

#include "numsemi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return numsemi::cli::run(args, std::cout, std::cerr);
}
