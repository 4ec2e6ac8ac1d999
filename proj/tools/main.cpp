#include "ltpair/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ltpair::cli::run(argc, argv, std::cout, std::cerr); }
