#include "gqm/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return gqm::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
