#include <chrono>
#include <cstdint>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "graceful/oracle.hpp"
#include "graceful/reference.hpp"
#include "graceful/sweep.hpp"

using namespace graceful;

namespace {

double time_of(const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const std::string& name, double serial, double parallel) {
    std::cout << std::left << std::setw(36) << name << std::right << std::fixed
              << std::setprecision(2) << std::setw(9) << serial << "s" << std::setw(9) << parallel
              << "s" << std::setw(7) << std::setprecision(1)
              << (parallel > 0.0 ? serial / parallel : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << std::left << std::setw(36) << "benchmark" << std::right << std::setw(10)
              << "serial" << std::setw(10) << "parallel" << std::setw(8) << "speedup"
              << "\n";

    {
        const int n = quick ? 10 : 12;
        std::vector<Tree> trees;
        trees.push_back(Tree::path(n));
        GeneratorSpec spec;
        spec.family = TreeFamily::Caterpillar;
        spec.n = n;
        spec.seed = 7;
        trees.push_back(generate(spec));
        spec.family = TreeFamily::RandomTree;
        spec.seed = 11;
        trees.push_back(generate(spec));

        std::uint64_t serial_count = 0, parallel_count = 0;
        const double ts = time_of([&] {
            for (const auto& t : trees) {
                SearchOptions o;
                o.mode = SearchMode::Count;
                serial_count += brute_force(t, o).count;
            }
        });
        const double tp = time_of([&] {
            for (const auto& t : trees) {
                SearchOptions o;
                o.mode = SearchMode::Count;
                o.parallel = true;
                parallel_count += brute_force(t, o).count;
            }
        });
        if (serial_count != parallel_count) {
            std::cerr << "count mismatch: " << serial_count << " vs " << parallel_count << "\n";
            return 1;
        }
        report("brute-force count, 3 trees n=" + std::to_string(n), ts, tp);
    }

    {
        const int n = quick ? 8 : 9;
        std::size_t a = 0, b = 0;
        const double ts =
            time_of([&] { a = ref::enumerate_trees_by_sequences(n, false).size(); });
        const double tp = time_of([&] { b = ref::enumerate_trees_by_sequences(n, true).size(); });
        if (a != b) {
            std::cerr << "enumeration mismatch: " << a << " vs " << b << "\n";
            return 1;
        }
        report("labeled-tree dedup n=" + std::to_string(n), ts, tp);
    }

    {
        sweep::Outcome rs, rp;
        const double ts = time_of([&] { rs = sweep::apm_pipeline(false); });
        const double tp = time_of([&] { rp = sweep::apm_pipeline(true); });
        if (rs.checked != rp.checked) {
            std::cerr << "sweep mismatch: " << rs.checked << " vs " << rp.checked << "\n";
            return 1;
        }
        report("apm pipeline sweep, odd n <= 11", ts, tp);
    }

    return 0;
}
