#include <iostream>
#include <string>
#include <vector>

#include "braidtool_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braidtool::run(args, std::cout, std::cerr);
}
