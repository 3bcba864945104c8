#include "m0n/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return m0n::cli::main_entry(argc, argv, std::cout, std::cerr); }
