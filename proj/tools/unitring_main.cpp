#include "unitring/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return unitring::run_cli(argc, argv, std::cout, std::cerr);
}
