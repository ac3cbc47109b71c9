#include <iostream>

#include "assoc/cli.hpp"

int main(int argc, char** argv) { return assoc::cli_main(argc, argv, std::cin, std::cout, std::cerr); }
