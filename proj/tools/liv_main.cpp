#include <iostream>

#include "liv/cli.hpp"

int main(int argc, char** argv) {
  return liv::run_cli(argc, argv, std::cout, std::cerr);
}
