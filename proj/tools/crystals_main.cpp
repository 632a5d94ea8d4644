#include <iostream>

#include "crystals/cli.hpp"

int main(int argc, char** argv) { return crystals::cli::main_entry(argc, argv, std::cout, std::cerr); }
