#include <iostream>

#include "edmsphere/cli.hpp"

int main(int argc, char** argv) { return edmsphere::cli::run(argc, argv, std::cout, std::cerr); }
