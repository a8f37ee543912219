#include <iostream>

#include "unc/cli/commands.hpp"

int main(int argc, char** argv) {
  return unc::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
