#include "somos_cli/app.hpp"

#include <iostream>

int main(int argc, char** argv) { return somos::cli::run_cli(argc, argv, std::cout, std::cerr); }
