#include <iostream>

#include "graphon/cli.hpp"

int main(int argc, char** argv) { return graphon::run(argc, argv, std::cout, std::cerr); }
