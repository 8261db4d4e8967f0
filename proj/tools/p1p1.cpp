#include <iostream>

#include "p1p1/cli/commands.hpp"

int main(int argc, char** argv)
{
    return p1p1::cli::run(argc, argv, std::cout, std::cerr);
}
