#include <iostream>
#include <string>
#include <vector>

#include "kfactor/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kfactor::cli_main(args, std::cout, std::cerr);
}
