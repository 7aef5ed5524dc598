#include "coneterm/cli.hpp"

int main(int argc, char** argv) {
    return coneterm::run(std::vector<std::string>(argv + 1, argv + argc));
}
