#include <iostream>

#include "hyperquad/cli.hpp"

int main(int argc, char** argv) {
    return hyperquad::cli::run(argc, argv, std::cout, std::cerr);
}
