#include <iostream>
#include <string>
#include <vector>

#include "wpsinv/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const wpsinv::CliResult result = wpsinv::cli_dispatch(args);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
