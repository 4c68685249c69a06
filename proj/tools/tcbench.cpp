#include <iostream>
#include <string>
#include <vector>

#include "tc/bench/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return tc::bench::cli_dispatch(args, std::cout, std::cerr);
}
