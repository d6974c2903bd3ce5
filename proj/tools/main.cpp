#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return shufflegrp::cli::run(argc, argv, std::cout, std::cerr);
}
