#include <iostream>

#include "loopbv/cli/cli.hpp"

int main(int argc, char** argv)
{
    return loopbv::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
