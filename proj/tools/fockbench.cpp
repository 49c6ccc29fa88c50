#include <iostream>

#include "fockbench/commands.hpp"

int main(int argc, char** argv) { return fockbench::run(argc, argv, std::cout, std::cerr); }
