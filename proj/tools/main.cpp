#include <iostream>
#include <string>
#include <vector>

#include "gr1core/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gr1core::run_cli(args, std::cout, std::cerr);
}
