#include <iostream>
#include <string>
#include <vector>

#include "valdim/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return valdim::run_cli(args, std::cout, std::cerr);
}
