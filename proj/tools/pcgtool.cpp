#include <iostream>
#include <string>
#include <vector>

#include "pcg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pcg::run_cli(args, std::cin, std::cout, std::cerr);
}
