#include <iostream>
#include <vector>

#include "wsync/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wsync::run_cli(args, std::cout, std::cerr);
}
