#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graceful::sweep {

struct Outcome {
    std::string name;
    bool pass = false;
    std::uint64_t checked = 0;  // units examined (trees, labelings, draws)
    std::uint64_t skipped = 0;  // out-of-scope units
    std::string detail;         // first failure, or a summary when passing
    double seconds = 0.0;
};

// Exhaustive checks of the library's guarantees at desk scale. Each sweep
// passes only with zero failures (and, where stated, within its time cap).
Outcome apm_pipeline(bool parallel = true);        // odd n <= 11, almost perfect matching
Outcome matching_missing_everywhere(bool parallel = true);  // every endpoint, brute cross-check
Outcome rosa_all_caterpillars(bool parallel = true);        // n <= 12, every start
Outcome composition_grid(bool parallel = true);    // n_S, n_T <= 5, plans included
Outcome pm_pipeline(bool parallel = true);         // even n <= 12, perfect matching
Outcome oracle_consistency(bool parallel = true);  // counts vs unpruned, first-hit budget
Outcome enumeration_counts(bool parallel = true);  // class counts for n = 1..12
Outcome expansion_round_trip(bool parallel = true);  // edge-set reproduction
Outcome complement_property(bool parallel = true);   // 1000 seeded draws

std::vector<Outcome> run_all(bool parallel = true);

}  // namespace graceful::sweep
