#include <iostream>

#include "aromatic/cli.hpp"

int main(int argc, char** argv)
{
    return aromatic::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
