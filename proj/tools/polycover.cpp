#include <iostream>
#include <string>
#include <vector>

#include "polycover/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polycover::cli::run(args, std::cout, std::cerr);
}
