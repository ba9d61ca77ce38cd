#include <string>
#include <vector>

#include "gbmhit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gbmhit::cli::run(args);
}
