#include <iostream>

#include "coxext/cli.hpp"

int main(int argc, char** argv) { return coxext::run_cli(argc, argv, std::cout, std::cerr); }
