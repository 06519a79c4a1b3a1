#include <iostream>
#include <string>
#include <vector>

#include "isotropy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return isotropy::cli::run(args, std::cout, std::cerr);
}
