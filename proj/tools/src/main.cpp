#include <iostream>
#include <string>
#include <vector>

#include "permdiag_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return permdiag::cli::run(args, std::cout, std::cerr);
}
