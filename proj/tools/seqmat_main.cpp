#include <iostream>

#include "seqmat/cli.hpp"

int main(int argc, char** argv) {
    return seqmat::cli::run(argc, argv, std::cout, std::cerr);
}
