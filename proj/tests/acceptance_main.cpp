// Acceptance runner: executes the seeded verification suite and prints one
// pass/fail line per criterion. Exit 0 iff every executed criterion passes.
//
//   acceptance [--seed N] [--criterion K]
//
// With no --criterion it runs all fourteen; --criterion K runs one.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "selftest.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 20260822;
    int criterion = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else if (arg == "--criterion" && i + 1 < argc) {
            criterion = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: acceptance [--seed N] [--criterion K]\n");
            return 2;
        }
    }
    if (criterion < 0 || criterion > 14) {
        std::fprintf(stderr, "criterion must lie in 1..14 (0 = all)\n");
        return 2;
    }
    ccxt::AcceptanceOutcome out = ccxt::run_acceptance_suite(seed, criterion);
    ccxt::print_outcomes(out, std::cout, /*show_seconds=*/true);
    return out.all_pass ? 0 : 1;
}
