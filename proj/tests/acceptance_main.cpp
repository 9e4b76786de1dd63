// Runs the twelve-point verification suite and prints one [PASS]/[FAIL] line
// per criterion; exits nonzero if anything failed.

#include <cstdio>
#include <cstdlib>
#include <iostream>

#include "tph/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 42;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    std::vector<tph::CriterionResult> results = tph::run_acceptance(seed, &std::cerr);

    bool all = true;
    double total = 0.0;
    for (const auto& r : results) {
        std::printf("[%s] %2d %-34s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.seconds);
        std::printf("          %s\n", r.detail.c_str());
        all = all && r.pass;
        total += r.seconds;
    }
    std::printf("%s (%zu criteria, %.2f s, seed %llu)\n",
                all ? "all criteria passed" : "SOME CRITERIA FAILED", results.size(), total,
                static_cast<unsigned long long>(seed));
    return all ? 0 : 1;
}
