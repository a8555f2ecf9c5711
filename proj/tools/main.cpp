#include <iostream>

#include "curvode/cli.hpp"

int main(int argc, char** argv) {
    return curvode::run_cli(argc, argv, std::cout, std::cerr);
}
