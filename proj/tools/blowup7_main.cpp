#include <iostream>

#include <blowup7/cli.hpp>

int main(int argc, char** argv)
{
    return blowup7::cli::run_cli(argc, argv, std::cout, std::cerr);
}
