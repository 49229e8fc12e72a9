#include <iostream>
#include <string>
#include <vector>

#include "netsemi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return netsemi::run_cli(args, std::cout, std::cerr);
}
