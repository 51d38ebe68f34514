#include <iostream>

#include "g2count/cli.hpp"

int main(int argc, char** argv) { return g2count::cli::run(argc, argv, std::cout, std::cerr); }
