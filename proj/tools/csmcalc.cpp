#include <iostream>
#include <string>
#include <vector>

#include "csmcalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return csmcalc::cli::run(args, std::cout, std::cerr, std::cin);
}
