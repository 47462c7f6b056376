#include <iostream>
#include <string>
#include <vector>

#include "gjl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gjl::run_cli(args, std::cout, std::cerr);
}
