#include <iostream>
#include <string>
#include <vector>

#include "permforest/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return permforest::run_cli(args, std::cout, std::cerr);
}
