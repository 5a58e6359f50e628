#include <iostream>
#include <string>
#include <vector>

#include "chromatica/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return chromatica::cli::run(args, std::cout, std::cerr);
}
