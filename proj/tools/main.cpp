#include <iostream>

#include "cga/cli.hpp"

int main(int argc, char** argv) {
  return cga::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
