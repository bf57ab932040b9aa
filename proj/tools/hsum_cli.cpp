#include <cstdio>

#include "hsum/harmonic.hpp"

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::puts("hsum6: command-line interface under construction");
    return 2;
}
