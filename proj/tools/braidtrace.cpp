#include <iostream>
#include <string>
#include <vector>

#include "braidtrace/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return braidtrace::cli_main(args, std::cout, std::cerr);
}
