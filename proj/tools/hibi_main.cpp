#include <iostream>

#include "hibi/cli.hpp"

int main(int argc, char** argv) {
    return hibi::run_cli(argc, argv, std::cout, std::cerr);
}
