#include <iostream>

#include "darboux/cli.hpp"

int main(int argc, char** argv) { return darboux::run_cli(argc, argv, std::cout, std::cerr); }
