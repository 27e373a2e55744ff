#include <iostream>
#include <string>
#include <vector>

#include "h2u/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return h2u::cli::run(std::move(args), std::cout, std::cerr);
}
