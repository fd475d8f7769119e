#include <iostream>
#include <string>
#include <vector>

#include "ksym_tools/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ksym::cli::run(args, std::cout, std::cerr);
}
