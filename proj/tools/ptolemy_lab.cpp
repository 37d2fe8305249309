#include <iostream>
#include <string>
#include <vector>

#include "ptolemy_lab/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return ptolemy_lab::run_cli(args, std::cout, std::cerr);
}
