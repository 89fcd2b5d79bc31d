#include <iostream>
#include <string>
#include <vector>

#include "soblag/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return soblag::run_cli(args, std::cout, std::cerr);
}
