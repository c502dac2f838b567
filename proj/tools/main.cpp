#include <iostream>

#include "primediv/cli.hpp"

int main(int argc, char** argv) { return primediv::cli::run(argc, argv, std::cout, std::cerr); }
