#include <iostream>

#include "efl/cli.hpp"

int main(int argc, char** argv) { return efl::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
