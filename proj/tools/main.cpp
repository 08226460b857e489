#include <iostream>

#include "gsc/cli.hpp"

int main(int argc, char** argv) {
  return gsc::cli::run(argc, argv, std::cout, std::cerr);
}
