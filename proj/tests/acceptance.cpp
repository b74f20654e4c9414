// Acceptance gate: every release-blocking guarantee as one pass/fail line.
// Exits nonzero if any sweep fails, so ctest reports the gate as a unit.
#include <cstdio>

#include "graceful/sweep.hpp"

int main() {
    const auto results = graceful::sweep::run_all(true);
    bool all_pass = true;
    int i = 0;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::printf("%s %d/%zu %-20s checked=%-8llu skipped=%-6llu %7.2fs  %s\n",
                    r.pass ? "PASS" : "FAIL", ++i, results.size(), r.name.c_str(),
                    static_cast<unsigned long long>(r.checked),
                    static_cast<unsigned long long>(r.skipped), r.seconds, r.detail.c_str());
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria met" : "acceptance: FAILURES");
    return all_pass ? 0 : 1;
}
