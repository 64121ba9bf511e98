// newton-incl - Newton's method for nonlinear inclusion problems over product cones
// Licensed under Apache 2.0

#include <iostream>
#include <string>
#include <vector>

#include "newton_incl/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return newton_incl::run_cli(args, std::cout, std::cerr);
}
