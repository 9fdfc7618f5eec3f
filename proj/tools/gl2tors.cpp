#include <iostream>

#include "gl2tors/cli/run.hpp"

int main(int argc, char** argv) { return gl2tors::run_cli(argc, argv, std::cout, std::cerr); }
