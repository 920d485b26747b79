#include <iostream>

#include "planar_turan/cli.hpp"

int main(int argc, char** argv) {
  return planar_turan::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
