// Command-line front end; see run() for the commands and exit codes.
#include <iostream>

#include "mmv/shell.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mmv::run(args, std::cout, std::cerr);
}
