#include <iostream>
#include <string>
#include <vector>

#include "alignrepair/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return alignrepair::cli_dispatch(args, std::cout, std::cerr);
}
