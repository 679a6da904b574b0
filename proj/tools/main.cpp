#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> env_tol;
    if (const char* t = std::getenv("CPM_TOL")) env_tol = t;
    try {
        return cpm::run_cli(args, std::cout, std::cerr, env_tol);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
