#include <iostream>

#include "alphanorm/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return alphanorm::run_cli(args, std::cout, std::cerr);
}
