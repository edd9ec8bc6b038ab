#include "hypcomp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hypcomp::run_cli(argc, argv, std::cout, std::cerr); }
