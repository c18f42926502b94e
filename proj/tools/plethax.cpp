#include <iostream>

#include "plethax/cli.hpp"

int main(int argc, char** argv) { return plethax::run_cli(argc, argv, std::cout, std::cerr); }
