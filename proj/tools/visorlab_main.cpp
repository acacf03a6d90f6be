#include <iostream>
#include <string>
#include <vector>

#include "visorlab/cli/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return visorlab::cli::run(args, std::cout, std::cerr);
}
