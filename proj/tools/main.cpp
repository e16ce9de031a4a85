#include <iostream>
#include <string>
#include <vector>

#include "sgwt_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return sgwt::cli::run(args, std::cout, std::cerr);
}
