#include <iostream>

#include "bfvd/cli.hpp"

int main(int argc, char** argv) { return bfvd::run_cli(argc, argv, std::cout, std::cerr); }
