#include <iostream>
#include <string>
#include <vector>

#include "procat/procli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return procat::procli::run(args, std::cout, std::cerr);
}
