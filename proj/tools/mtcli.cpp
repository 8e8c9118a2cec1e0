#include <iostream>

#include "mt/cli.hpp"

int main(int argc, char** argv) { return mt::run_cli(argc, argv, std::cout, std::cerr); }
