#include <iostream>

#include "implab/cli.hpp"

int main(int argc, char** argv) {
  return implab::cli::run(argc, argv, {std::cin, std::cout, std::cerr});
}
