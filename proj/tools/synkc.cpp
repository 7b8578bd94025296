#include <iostream>

#include "synk/cli.hpp"

int main(int argc, char** argv) {
  return synk::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
