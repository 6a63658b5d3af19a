#include <iostream>

#include "braidcube/cli/commands.hpp"

int main(int argc, char** argv) { return braidcube::cli::main_entry(argc, argv, std::cout, std::cerr); }
