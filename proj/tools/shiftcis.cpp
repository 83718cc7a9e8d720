#include <iostream>

#include "shiftcis/cli.hpp"

int main(int argc, char** argv) { return shiftcis::run_cli(argc, argv, std::cout, std::cerr); }
