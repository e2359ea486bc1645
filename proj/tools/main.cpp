#include "thickset/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return thickset::cli::run_cli(argc, argv, std::cout, std::cerr);
}
