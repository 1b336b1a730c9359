#include "pisot/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pisot::cli::run(argc, argv, std::cout, std::cerr); }
