#include <iostream>

#include "arbor/cli/commands.hpp"

int main(int argc, char** argv) {
  return arbor::cli::run_cli(argc, argv, std::cout, std::cerr);
}
