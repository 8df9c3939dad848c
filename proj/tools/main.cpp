#include <iostream>
#include <string>
#include <vector>

#include "prelie/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return prelie::run_cli(args, std::cout, std::cerr);
}
