#include <iostream>
#include <string>
#include <vector>

#include "wtd/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return wtd::run_cli(args, std::cout, std::cerr);
}
