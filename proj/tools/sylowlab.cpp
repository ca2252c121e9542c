#include <iostream>

#include "sylowlab/cli.hpp"

int main(int argc, char** argv) { return sylowlab::run_cli(argc, argv, std::cout, std::cerr); }
