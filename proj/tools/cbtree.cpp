#include <iostream>

#include "cbtree/cli.hpp"

int main(int argc, char **argv) { return cbtree::run_cli(argc, argv, std::cout, std::cerr); }
