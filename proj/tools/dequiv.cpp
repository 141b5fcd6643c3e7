#include <iostream>

#include "dequiv/cli/cli.hpp"

int main(int argc, char** argv) { return dequiv::cli::run(argc, argv, std::cout, std::cerr); }
