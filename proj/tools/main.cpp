#include "klein4/cli.hpp"

int main(int argc, char** argv) {
    return k4::cli::run(argc, argv);
}
