#include <iostream>

#include "pfsum_cli/cli.hpp"

int main(int argc, char** argv) { return pfsum::cli::run(argc, argv, std::cout, std::cerr); }
