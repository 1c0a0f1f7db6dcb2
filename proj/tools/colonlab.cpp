#include <iostream>
#include <string>
#include <vector>

#include "colonlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return colonlab::cli::run(args, std::cout, std::cerr);
}
