#include <iostream>
#include <string>
#include <vector>

#include "lexiboot/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return lexiboot::cli::run(args, std::cout, std::cerr);
}
