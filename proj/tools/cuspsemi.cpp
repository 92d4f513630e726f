#include <string>
#include <vector>
#include <iostream>

#include "cuspsemi/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cuspsemi::cli::run(args, std::cout, std::cerr);
}
