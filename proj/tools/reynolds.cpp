#include <iostream>
#include <string>
#include <vector>

#include "reynolds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return reynolds::cli::run(args, std::cout, std::cerr);
}
