#include <iostream>
#include <string>
#include <vector>

#include "qfib/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qfib::dispatch(args, std::cout, std::cerr);
}
