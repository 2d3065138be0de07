#include <iostream>
#include <string>
#include <vector>

#include "tanpoly/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return tanpoly::run_cli(args, std::cout, std::cerr);
}
