#include <iostream>
#include <string>
#include <vector>

#include "sccpres/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sccp::cli::run(args, std::cout, std::cerr);
}
