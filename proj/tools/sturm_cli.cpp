#include <iostream>
#include <string>
#include <vector>

#include "sturm/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return sturm::cli::run(args, std::cout, std::cerr, std::cin);
}
