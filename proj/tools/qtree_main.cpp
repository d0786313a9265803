#include <iostream>
#include <string>
#include <vector>

#include "qtree/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qtree::cli::run(args, std::cout, std::cerr);
}
