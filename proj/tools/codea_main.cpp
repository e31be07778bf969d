#include <codea/harness.hpp>

#include <iostream>

int main(int argc, char **argv)
{
    return codea::cli_run(argc, argv, std::cout, std::cerr);
}
