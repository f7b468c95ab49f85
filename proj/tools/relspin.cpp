#include <iostream>

#include "relspin/cli/commands.hpp"

int main(int argc, char** argv)
{
    return relspin::cli::run(argc, argv, std::cout, std::cerr);
}
