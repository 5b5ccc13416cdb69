#include <iostream>
#include <vector>

#include "stirsys/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stirsys::run_cli(args, std::cout, std::cerr);
}
