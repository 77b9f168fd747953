#include <iostream>
#include <string>
#include <vector>

#include "fdrate/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fdrate::cli::main_entry(args, std::cout, std::cerr);
}
