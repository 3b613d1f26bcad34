#include <iostream>
#include <string>
#include <vector>

#include "subtile/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return subtile::cli_run(std::move(args), std::cout, std::cerr);
}
