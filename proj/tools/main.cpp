#include <cstdio>
#include <string>
#include <vector>

#include "symf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    symf::cli::CommandResult r = symf::cli::run_command(args);
    std::fputs(r.output.c_str(), r.exit_code == 0 ? stdout : stderr);
    return r.exit_code;
}
