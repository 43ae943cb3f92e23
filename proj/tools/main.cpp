#include <iostream>

#include "coxfan/cli.hpp"

int main(int argc, char** argv) { return coxfan::cli_main(argc, argv, std::cout, std::cerr); }
