#include <iostream>
#include <string>
#include <vector>

#include "cumulant/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cumulant::cli::run(args, std::cout, std::cerr);
}
