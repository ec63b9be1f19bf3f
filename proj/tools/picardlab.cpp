#include <iostream>

#include "picardlab/cli.hpp"

int main(int argc, char** argv) { return picardlab::run_cli(argc, argv, std::cout, std::cerr); }
