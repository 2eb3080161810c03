#include <iostream>

#include "mhg_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mhg::cli::run(args, std::cout, std::cerr);
}
