#include <iostream>

#include "reglang/cli.hpp"

int main(int argc, char** argv) { return reglang::cli::main(argc, argv, std::cout, std::cerr); }
