#include <iostream>
#include <string>
#include <vector>

#include "satake/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return satake::cli::run(args, std::cout, std::cerr);
}
