#include <iostream>

#include "hopfq/cli.hpp"

int main(int argc, char** argv) { return hopfq::cli_main(argc, argv, std::cout, std::cerr); }
