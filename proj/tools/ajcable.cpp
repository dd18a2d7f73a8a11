#include "ajcable/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ajcable::run(argc, argv, std::cout, std::cerr); }
