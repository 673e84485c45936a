#include <iostream>

#include "besse/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return besse::cli::run(args, std::cout, std::cerr);
}
