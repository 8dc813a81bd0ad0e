#include <iostream>

#include "krtorus/cli.hpp"

int main(int argc, char** argv) {
  return krtorus::cli::main(argc, argv, std::cin, std::cout, std::cerr);
}
