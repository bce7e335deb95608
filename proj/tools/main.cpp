#include <iostream>

#include "knitfold/cli.hpp"

int main(int argc, char** argv) { return knitfold::run(argc, argv, std::cout, std::cerr); }
