#include <iostream>

#include "bubble/cli.hpp"

int main(int argc, char** argv) { return bubble::run_cli(argc, argv, std::cout, std::cerr); }
