#include <iostream>
#include <string>
#include <vector>

#include "elnet/cli.hpp"

int main(int argc, char* argv[]) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return elnet::cli::run(args, std::cin, std::cout, std::cerr);
}
