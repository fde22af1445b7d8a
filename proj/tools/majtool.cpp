#include <iostream>
#include <string>
#include <vector>

#include "majority/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return majority::cli::run(std::move(args), std::cout, std::cerr);
}
