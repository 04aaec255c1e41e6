#include <iostream>

#include "verify.hpp"

int main(int argc, char** argv) { return fracorder::cli::run_cli(argc, argv, std::cout, std::cerr); }
