#include <iostream>

#include "hyperverify_cli/cli.hpp"

int main(int argc, char** argv) { return hyperverify::cli::run(argc, argv, std::cout, std::cerr); }
