#include <iostream>

#include "proxsmooth/cli.hpp"

int main(int argc, char** argv) {
  return proxsmooth::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
