#include <iostream>
#include <string>
#include <vector>

#include "chargealg/cli.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return chargealg::run_cli(args, std::cout, std::cerr);
}
