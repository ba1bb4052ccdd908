#include <iostream>
#include <string>
#include <vector>

#include <leafcon/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return leafcon::cli::cli_run(std::move(args), std::cout, std::cerr, std::cin);
}
