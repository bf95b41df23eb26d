#include <iostream>
#include <string>
#include <vector>

#include "paq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return paq::cli::run(args, std::cout);
}
