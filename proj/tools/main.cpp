#include <iostream>
#include <string>
#include <vector>

#include "trendclass/cli.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv, argv + argc);
    return trendclass::run_pipeline(args, std::cin, std::cout, std::cerr);
}
