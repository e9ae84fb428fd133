#include <iostream>
#include <vector>

#include "hamlim/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hamlim::run_cli(args, std::cout, std::cerr);
}
