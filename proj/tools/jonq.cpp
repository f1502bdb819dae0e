#include <iostream>

#include "jonq/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return jonq::cli::run(args, std::cout, std::cerr);
}
