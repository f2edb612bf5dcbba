#include <iostream>

#include "dualpricer/cli.hpp"

int main(int argc, char** argv) {
    return dualpricer::run_cli(argc, argv, std::cout, std::cerr);
}
