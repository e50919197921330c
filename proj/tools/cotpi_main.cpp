#include <iostream>

#include "cotpi/cli.hpp"

int main(int argc, char** argv) {
  return cotpi::cli_main(argc, argv, std::cout, std::cerr);
}
