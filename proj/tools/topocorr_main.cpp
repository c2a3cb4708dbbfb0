#include <iostream>
#include <string>
#include <vector>

#include "topocorr/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return topocorr::run_cli(args, std::cout, std::cerr);
}
