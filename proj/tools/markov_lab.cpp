#include <iostream>
#include <string>
#include <vector>

#include "markov/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return markov::cli::run(args, std::cout, std::cerr);
}
