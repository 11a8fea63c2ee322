#include <iostream>

#include "hcot/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hcot::run_cli(args, std::cout, std::cerr);
}
