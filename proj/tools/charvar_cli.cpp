#include <iostream>

#include "charvar/cli.hpp"

int main(int argc, char** argv) { return charvar::run_cli(argc, argv, std::cout, std::cerr); }
