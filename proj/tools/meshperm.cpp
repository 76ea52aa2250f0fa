#include <iostream>
#include <string>
#include <vector>

#include "meshperm/cli.hpp"

int main(int argc, char** argv) {
  return meshperm::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
