#include <iostream>

#include "spp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return spp::run_cli(args, std::cout, std::cerr);
}
