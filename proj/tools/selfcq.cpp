#include <iostream>
#include <string>
#include <vector>

#include "selfcq/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return selfcq::run_cli(args, std::cout, std::cerr);
}
