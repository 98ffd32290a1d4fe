#include "fdcalc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return fdcalc::cli_main(argc, argv, std::cout, std::cerr);
}
