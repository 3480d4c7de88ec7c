#include <iostream>

#include "spreadlab/cli.hpp"

int main(int argc, char** argv) { return spreadlab::cli::run(argc, argv, std::cout, std::cerr); }
