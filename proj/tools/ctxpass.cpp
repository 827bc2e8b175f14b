#include <iostream>
#include <string>
#include <vector>

#include "ctxpass/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ctxpass::dispatch(args, std::cin, std::cout, std::cerr);
}
