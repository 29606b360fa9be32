#include <iostream>
#include <vector>

#include "ostra/cli.hpp"

int main(int argc, char** argv) {
  return ostra::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                         std::cerr);
}
