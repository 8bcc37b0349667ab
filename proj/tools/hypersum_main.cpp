#include <iostream>

#include "hypersum/cli.hpp"

int main(int argc, char** argv) { return hypersum::run_cli(argc, argv, std::cout, std::cerr); }
