#include <iostream>  // for cout, cerr
#include <string>    // for string
#include <vector>    // for vector

#include "qsemi/cli.hpp"  // for run_cli

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qsemi::run_cli(std::move(args), std::cout, std::cerr);
}
