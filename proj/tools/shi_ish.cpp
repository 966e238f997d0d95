#include <iostream>

#include "shiish/cli.h"

int main(int argc, char** argv) { return shiish::cli::run_cli(argc, argv, std::cout, std::cerr); }
