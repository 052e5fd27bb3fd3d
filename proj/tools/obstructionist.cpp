#include <iostream>
#include <string>
#include <vector>

#include "obstructionist/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return obstructionist::cli::run(args, std::cout, std::cerr);
}
