#include <iostream>

#include "frobalg/cli.hpp"

int main(int argc, char** argv) { return frobalg::cli::main(argc, argv, std::cout, std::cerr); }
