#include <iostream>
#include <string>
#include <vector>

#include "corrideal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return corrideal::run_command(args, std::cout, std::cerr);
}
