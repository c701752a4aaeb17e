#include <iostream>
#include <vector>

#include "akh/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    akh::CliResult r = akh::run_cli(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.code;
}
