#include <iostream>

#include "octa/cli.hpp"

int main(int argc, char** argv) { return octa::run_cli(argc, argv, std::cout, std::cerr); }
