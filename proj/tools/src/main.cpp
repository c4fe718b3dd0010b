#include <iostream>
#include <string>
#include <vector>

#include "k4st_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return k4st::cli::run(args, std::cout, std::cerr);
}
