#include <iostream>

#include "bolano/cli.hpp"

int main(int argc, char** argv) {
  return bolano::run_cli(argc, argv, std::cout, std::cerr);
}
