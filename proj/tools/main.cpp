#include <iostream>

#include "qcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qcalc::run_cli(args, std::cin, std::cout, std::cerr);
}
