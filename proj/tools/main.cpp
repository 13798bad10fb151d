#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return emltab::cli::run(argc, argv, std::cout, std::cerr); }
