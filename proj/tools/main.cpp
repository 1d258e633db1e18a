#include <iostream>

#include "signcount/cli.hpp"

int main(int argc, char **argv) { return signcount::cli::run(argc, argv, std::cout, std::cerr); }
