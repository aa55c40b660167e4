#include <iostream>
#include <string>
#include <vector>

#include "quadcrucial/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quadcrucial::cli::run(args, std::cout, std::cerr);
}
