#include <iostream>

#include "malcev/cli.hpp"

int main(int argc, char** argv) {
  return malcev::cli_main(argc, argv, std::cout, std::cerr);
}
