#include <iostream>

#include "nilfilt/cli.hpp"

int main(int argc, char** argv) {
  return nilfilt::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
