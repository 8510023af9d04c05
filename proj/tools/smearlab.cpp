#include <iostream>

#include "smearlab/cli.hpp"

int main(int argc, char** argv) { return smearlab::run_cli(argc, argv, std::cout, std::cerr); }
