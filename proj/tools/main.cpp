#include <iostream>
#include <vector>

#include "monring/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return monring::cli::run(std::move(args), std::cout, std::cerr);
}
