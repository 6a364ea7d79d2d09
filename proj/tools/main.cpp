#include <iostream>
#include <string>
#include <vector>

#include "chevalley/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chevalley::run_cli(args, std::cout, std::cerr);
}
