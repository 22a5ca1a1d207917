#include <iostream>
#include <vector>

#include "bottomless/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bottomless::cli_main(std::move(args), std::cin, std::cout, std::cerr);
}
