#include <iostream>
#include <string>
#include <vector>

#include "fullrank/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return fullrank::cli::run(args, std::cout, std::cerr);
}
