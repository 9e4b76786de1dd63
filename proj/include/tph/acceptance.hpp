#pragma once

// The twelve-point verification suite shared by `tph verify-all` and the
// acceptance test binary.  Every tolerance is pinned here, not in flags.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tph {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;   // deterministic (no timings, no addresses)
    double seconds = 0.0; // wall time, reported out of band
};

// Runs criteria 1..12 with the given seed; progress lines go to *log when it
// is non-null (stderr in the CLI).
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream* log);

}  // namespace tph
