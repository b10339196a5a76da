#include <iostream>

#include "hfk/cli.hpp"

int main(int argc, char** argv) { return hfk::run_cli(argc, argv, std::cout, std::cerr); }
