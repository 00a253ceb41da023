#include <iostream>
#include <string>
#include <vector>

#include "ringstd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ringstd::run_cli(args, std::cout, std::cerr);
}
