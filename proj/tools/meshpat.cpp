#include "meshpat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return meshpat::run_cli(argc, argv, std::cout, std::cerr); }
