#include <iostream>

#include "abelcut_cli/commands.hpp"

int main(int argc, char** argv) { return abelcut::cli::run_cli(argc, argv, std::cout, std::cerr); }
