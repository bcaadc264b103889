#include <iostream>

#include "mms/cli.hpp"

int main(int argc, char **argv)
{
    return mms::cli::run(argc, argv, std::cout, std::cerr);
}
