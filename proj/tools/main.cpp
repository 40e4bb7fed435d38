#include <iostream>

#include "ordalg/cli.hpp"

int main(int argc, char** argv) {
  return ordalg::cli::run(argc, argv, std::cout, std::cerr);
}
