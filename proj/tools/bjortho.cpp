#include <iostream>

#include "bjortho/cli.hpp"

int main(int argc, char** argv) { return bjortho::cli::run(argc, argv, std::cout, std::cerr); }
