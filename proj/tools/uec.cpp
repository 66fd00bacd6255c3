#include <iostream>

#include "uec/cli.hpp"

int main(int argc, char** argv) { return uec::cli::run(argc, argv, std::cout, std::cerr); }
