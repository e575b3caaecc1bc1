#include <iostream>
#include <string>
#include <vector>

#include "dscode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return dscode::run_cli(args, std::cout, std::cerr);
}
