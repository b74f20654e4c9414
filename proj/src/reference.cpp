#include "graceful/reference.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "graceful/oracle.hpp"

namespace graceful::ref {

std::uint64_t count_graceful_unpruned(const Tree& t) {
    const int n = t.order();
    if (n > 10) throw Error("unpruned count is limited to order 10");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        if (verify_graceful(t, Labeling(perm)).ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

namespace {

void matchings_rec(const Tree& t, std::size_t i, std::vector<Edge>& picked,
                   std::vector<char>& used, std::vector<Matching>& out) {
    if (i == t.edges().size()) {
        out.push_back(Matching{picked});
        return;
    }
    const auto [u, v] = t.edges()[i];
    matchings_rec(t, i + 1, picked, used, out);
    if (!used[static_cast<std::size_t>(u)] && !used[static_cast<std::size_t>(v)]) {
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
        picked.push_back({u, v});
        matchings_rec(t, i + 1, picked, used, out);
        picked.pop_back();
        used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
    }
}

}  // namespace

std::vector<Matching> all_matchings(const Tree& t) {
    if (t.order() > 22) throw Error("matching enumeration is limited to order 22");
    std::vector<Matching> out;
    std::vector<Edge> picked;
    std::vector<char> used(static_cast<std::size_t>(t.order()), 0);
    matchings_rec(t, 0, picked, used, out);
    return out;
}

int max_matching_size_by_enumeration(const Tree& t) {
    int best = 0;
    for (const auto& m : all_matchings(t)) best = std::max(best, m.size());
    return best;
}

bool isomorphic_by_permutation(const Tree& a, const Tree& b) {
    if (a.order() != b.order()) return false;
    const int n = a.order();
    if (n > 10) throw Error("permutation isomorphism is limited to order 10");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (auto [u, v] : a.edges())
            if (!b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
                match = false;
                break;
            }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<Tree> enumerate_trees_by_sequences(int n, bool parallel) {
    if (n < 1) throw Error("order must be at least 1");
    if (n > 9) throw Error("sequence enumeration is limited to order 9");
    std::map<std::string, Tree> classes;
    if (n <= 2) {
        Tree t = Tree::path(n);
        classes.emplace(canonical_code(t), std::move(t));
    } else {
        const int prefix_count = n;
        std::uint64_t inner = 1;
        for (int i = 0; i < n - 3; ++i) inner *= static_cast<std::uint64_t>(n);
        std::vector<std::map<std::string, Tree>> partial(static_cast<std::size_t>(prefix_count));
        std::string failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int first = 0; first < prefix_count; ++first) {
            try {
                auto& local = partial[static_cast<std::size_t>(first)];
                std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
                seq[0] = first;
                for (std::uint64_t it = 0; it < inner; ++it) {
                    std::uint64_t rest = it;
                    for (int pos = 1; pos < n - 2; ++pos) {
                        seq[static_cast<std::size_t>(pos)] =
                            static_cast<int>(rest % static_cast<std::uint64_t>(n));
                        rest /= static_cast<std::uint64_t>(n);
                    }
                    Tree t = tree_from_pruefer(seq, n);
                    auto code = canonical_code(t);
                    local.try_emplace(std::move(code), std::move(t));
                }
            } catch (const std::exception& e) {
#pragma omp critical
                failure = e.what();
            }
        }
        if (!failure.empty()) throw Error(failure);
        for (auto& local : partial)
            for (auto& [code, t] : local) classes.try_emplace(code, std::move(t));
    }
    std::vector<Tree> out;
    out.reserve(classes.size());
    for (auto& [code, t] : classes) out.push_back(std::move(t));
    return out;
}

int diameter_all_pairs(const Tree& t) {
    int d = 0;
    for (int v = 0; v < t.order(); ++v) d = std::max(d, eccentricity(t, v));
    return d;
}

}  // namespace graceful::ref
