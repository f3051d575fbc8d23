#include <iostream>

#include "charherm/cli.hpp"

int main(int argc, char** argv) { return charherm::run_cli(argc, argv, std::cout, std::cerr); }
