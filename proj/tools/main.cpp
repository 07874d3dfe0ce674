#include <iostream>
#include <string>
#include <vector>

#include "ordchomp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ordchomp::run(args, std::cout, std::cerr, std::cin);
}
