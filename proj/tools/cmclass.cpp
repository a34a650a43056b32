#include <iostream>
#include <string>
#include <vector>

#include "cmclass/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cmclass::run_cli(args, std::cout, std::cerr);
}
