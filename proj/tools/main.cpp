#include <iostream>

#include "cyclo/cli.hpp"

int main(int argc, char** argv) {
  return cyclo::cli::run(argc, argv, std::cout, std::cerr);
}
