#include <iostream>

#include "tmanalogs/cli.hpp"

int main(int argc, char** argv)
{
    return tmanalogs::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
