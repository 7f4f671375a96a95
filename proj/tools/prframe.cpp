#include "prframe/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return prframe::cli::run(argc, argv, std::cout, std::cerr); }
