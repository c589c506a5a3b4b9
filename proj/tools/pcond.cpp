#include <iostream>

#include "pcond/cli.hpp"

int main(int argc, char** argv) { return pcond::cli::run(argc, argv, std::cout, std::cerr); }
