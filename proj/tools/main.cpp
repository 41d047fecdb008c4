#include "steady/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return steady::run_cli(argc, argv, std::cout, std::cerr); }
