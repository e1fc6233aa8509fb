#include <iostream>

#include "twinec/cli/cli.hpp"

int main(int argc, char** argv) { return twinec::run_cli(argc, argv, std::cout, std::cerr); }
