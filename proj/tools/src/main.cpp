#include "ktoric/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return ktoric::cli::run(argc, argv, std::cout, std::cerr);
}
