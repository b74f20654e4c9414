#include "graceful/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "graceful/rng.hpp"

namespace graceful {

namespace {

struct Searcher {
    const Tree& t;
    const SearchOptions& opts;
    int n;
    std::vector<int> order;  // assignment order: degree descending, id ascending
    std::vector<int> mate;   // strongly-graceful partner, -1 otherwise
    std::vector<int> label;
    std::uint64_t used_labels = 0;
    std::uint64_t used_weights = 0;
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    bool budget_hit = false;
    std::vector<Labeling> hits;
    int fixed_first = -1;  // parallel fan-out pins the first vertex's label

    Searcher(const Tree& tree, const SearchOptions& o) : t(tree), opts(o), n(tree.order()) {
        order.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (t.degree(a) != t.degree(b)) return t.degree(a) > t.degree(b);
            return a < b;
        });
        mate.assign(static_cast<std::size_t>(n), -1);
        if (opts.strongly)
            for (auto [a, b] : opts.strongly->pairs) {
                mate[static_cast<std::size_t>(a)] = b;
                mate[static_cast<std::size_t>(b)] = a;
            }
        label.assign(static_cast<std::size_t>(n), -1);
    }

    // A completed assignment is graceful by construction: all n labels are
    // distinct in 0..n-1 and the n-1 weights are distinct in 1..n-1.
    bool leaf_accept() const {
        if (!opts.up_to_complement) return true;
        int v0 = -1, vtop = -1;
        for (int v = 0; v < n; ++v) {
            if (label[static_cast<std::size_t>(v)] == 0) v0 = v;
            if (label[static_cast<std::size_t>(v)] == n - 1) vtop = v;
        }
        return n == 1 || v0 < vtop;
    }

    // Returns true to stop the whole search (first hit found, or budget).
    bool place(std::size_t step) {
        if (step == static_cast<std::size_t>(n)) {
            if (!leaf_accept()) return false;
            ++count;
            if (opts.mode == SearchMode::First) {
                hits.emplace_back(label);
                return true;
            }
            if (opts.mode == SearchMode::All) {
                if (opts.sink)
                    opts.sink(Labeling(label));
                else
                    hits.emplace_back(label);
            }
            return false;
        }
        const int v = order[step];
        const int mv = mate[static_cast<std::size_t>(v)];
        for (int l = 0; l < n; ++l) {
            if (step == 0 && fixed_first >= 0 && l != fixed_first) continue;
            if (used_labels >> l & 1) continue;
            if (opts.zero_at) {
                if (v == *opts.zero_at && l != 0) continue;
                if (v != *opts.zero_at && l == 0) continue;
            }
            if (mv >= 0 && label[static_cast<std::size_t>(mv)] >= 0 &&
                label[static_cast<std::size_t>(mv)] + l != n - 1)
                continue;
            std::uint64_t wmask = 0;
            bool fresh = true;
            for (int w : t.neighbors(v)) {
                if (label[static_cast<std::size_t>(w)] < 0) continue;
                const std::uint64_t bit = 1ULL << std::abs(l - label[static_cast<std::size_t>(w)]);
                if ((used_weights | wmask) & bit) {
                    fresh = false;
                    break;
                }
                wmask |= bit;
            }
            if (!fresh) continue;
            if (opts.node_budget && nodes >= *opts.node_budget) {
                budget_hit = true;
                return true;
            }
            ++nodes;
            label[static_cast<std::size_t>(v)] = l;
            used_labels |= 1ULL << l;
            used_weights |= wmask;
            const bool stop = place(step + 1);
            used_weights &= ~wmask;
            used_labels &= ~(1ULL << l);
            label[static_cast<std::size_t>(v)] = -1;
            if (stop) return true;
        }
        return false;
    }
};

void check_options(const Tree& t, const SearchOptions& opts) {
    if (opts.strongly && opts.zero_at) throw Error("at most one search constraint");
    if (opts.zero_at && (*opts.zero_at < 0 || *opts.zero_at >= t.order()))
        throw Error("constraint vertex " + std::to_string(*opts.zero_at) + " out of range");
    if (opts.strongly) {
        if (!is_matching(t, *opts.strongly)) throw Error("not a matching of the tree");
        if (2 * opts.strongly->size() != t.order()) throw Error("matching is not perfect");
    }
    if (opts.node_budget && *opts.node_budget == 0) throw Error("node budget must be positive");
    if (t.order() > 64) throw Error("tree too large: label masks cap the order at 64");
    if (opts.mode != SearchMode::First && t.order() > kMaxExhaustiveOrder)
        throw Error("tree too large for exhaustive search (order > " +
                    std::to_string(kMaxExhaustiveOrder) + ")");
}

}  // namespace

SearchResult brute_force(const Tree& t, const SearchOptions& opts) {
    check_options(t, opts);

    const bool fan_out = opts.mode == SearchMode::Count && opts.parallel && !opts.node_budget &&
                         t.order() > 1;
    if (!fan_out) {
        Searcher s(t, opts);
        s.place(0);
        SearchResult r;
        r.status = s.budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::Done;
        r.count = s.count;
        r.nodes_visited = s.nodes;
        r.labelings = std::move(s.hits);
        return r;
    }

    // Independent branches per first-vertex label; totals are order-free.
    const int n = t.order();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> nodes(static_cast<std::size_t>(n), 0);
    std::string failure;
#pragma omp parallel for schedule(dynamic)
    for (int l = 0; l < n; ++l) {
        try {
            Searcher s(t, opts);
            s.fixed_first = l;
            s.place(0);
            counts[static_cast<std::size_t>(l)] = s.count;
            nodes[static_cast<std::size_t>(l)] = s.nodes;
        } catch (const std::exception& e) {
#pragma omp critical
            failure = e.what();
        }
    }
    if (!failure.empty()) throw Error(failure);
    SearchResult r;
    for (int l = 0; l < n; ++l) {
        r.count += counts[static_cast<std::size_t>(l)];
        r.nodes_visited += nodes[static_cast<std::size_t>(l)];
    }
    return r;
}

RotatabilityResult is_zero_rotatable(const Tree& t, std::optional<std::uint64_t> node_budget) {
    RotatabilityResult out;
    out.witness.assign(static_cast<std::size_t>(t.order()), std::nullopt);
    for (int v = 0; v < t.order(); ++v) {
        SearchOptions opts;
        opts.mode = SearchMode::First;
        opts.zero_at = v;
        opts.node_budget = node_budget;
        auto r = brute_force(t, opts);
        if (r.status == SearchStatus::BudgetExhausted) {
            out.status = SearchStatus::BudgetExhausted;
            out.rotatable = false;
            return out;
        }
        if (r.labelings.empty()) {
            out.rotatable = false;
            out.failing_vertex = v;
            return out;
        }
        out.witness[static_cast<std::size_t>(v)] = std::move(r.labelings.front());
    }
    out.rotatable = true;
    return out;
}

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) throw Error("order must be at least 1");
    if (n > kMaxEnumerationOrder)
        throw Error("order " + std::to_string(n) + " exceeds the enumeration bound " +
                    std::to_string(kMaxEnumerationOrder));
    // Every tree on k vertices is a tree on k-1 plus one leaf, so growing
    // all representatives by one leaf in every position reaches every class.
    std::map<std::string, Tree> level;
    level.emplace(canonical_code(Tree::single()), Tree::single());
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Tree> grown;
        for (const auto& [code, t] : level) {
            for (int v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.push_back({v, k - 1});
                Tree g(k, std::move(edges));
                auto c = canonical_code(g);
                grown.try_emplace(std::move(c), std::move(g));
            }
        }
        level = std::move(grown);
    }
    std::vector<Tree> out;
    out.reserve(level.size());
    for (auto& [code, t] : level) out.push_back(std::move(t));
    return out;
}

Tree tree_from_pruefer(const std::vector<int>& seq, int n) {
    if (n < 1) throw Error("order must be at least 1");
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw Error("sequence length must be n-2");
    if (n == 1) return Tree::single();
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int s : seq) {
        if (s < 0 || s >= n) throw Error("sequence value out of range");
        ++deg[static_cast<std::size_t>(s)];
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) - 1);
    int ptr = 0;
    while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.push_back(make_edge(leaf, s));
        if (--deg[static_cast<std::size_t>(s)] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (deg[static_cast<std::size_t>(ptr)] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.push_back(make_edge(leaf, n - 1));
    return Tree(n, std::move(edges));
}

TreeFamily tree_family_from_string(const std::string& s) {
    if (s == "random_tree") return TreeFamily::RandomTree;
    if (s == "caterpillar") return TreeFamily::Caterpillar;
    if (s == "lobster") return TreeFamily::Lobster;
    if (s == "lobster_apm") return TreeFamily::LobsterApm;
    if (s == "lobster_pm") return TreeFamily::LobsterPm;
    throw Error("unknown tree family '" + s + "'");
}

std::string to_string(TreeFamily f) {
    switch (f) {
        case TreeFamily::RandomTree: return "random_tree";
        case TreeFamily::Caterpillar: return "caterpillar";
        case TreeFamily::Lobster: return "lobster";
        case TreeFamily::LobsterApm: return "lobster_apm";
        case TreeFamily::LobsterPm: return "lobster_pm";
    }
    return "random_tree";
}

namespace {

Tree random_tree(int n, SplitMix64& rng) {
    if (n <= 2) return Tree::path(n);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& s : seq) s = rng.below_int(n);
    return tree_from_pruefer(seq, n);
}

Tree random_caterpillar(int n, SplitMix64& rng) {
    if (n <= 2) return Tree::path(n);
    const int k = 1 + rng.below_int(n);  // spine 0..k-1
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    for (int v = k; v < n; ++v) edges.push_back(make_edge(rng.below_int(k), v));
    return Tree(n, std::move(edges));
}

Tree random_lobster(int n, SplitMix64& rng) {
    if (n <= 2) return Tree::path(n);
    const int k = 1 + rng.below_int(n);
    std::vector<Edge> edges;
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    std::vector<int> shallow;  // vertices at depth <= 1 from the spine
    for (int i = 0; i < k; ++i) {
        if (i + 1 < k) edges.push_back({i, i + 1});
        shallow.push_back(i);
    }
    for (int v = k; v < n; ++v) {
        const int p = shallow[static_cast<std::size_t>(rng.below(shallow.size()))];
        edges.push_back(make_edge(p, v));
        depth[static_cast<std::size_t>(v)] = depth[static_cast<std::size_t>(p)] + 1;
        if (depth[static_cast<std::size_t>(v)] <= 1) shallow.push_back(v);
    }
    return Tree(n, std::move(edges));
}

}  // namespace

Tree generate(const GeneratorSpec& spec) {
    if (spec.n < 1) throw Error("order must be at least 1");
    SplitMix64 rng(spec.seed);
    switch (spec.family) {
        case TreeFamily::RandomTree: return random_tree(spec.n, rng);
        case TreeFamily::Caterpillar: return random_caterpillar(spec.n, rng);
        case TreeFamily::Lobster: return random_lobster(spec.n, rng);
        case TreeFamily::LobsterApm: {
            if (spec.n % 2 == 0)
                throw Error("family lobster_apm requires odd order, got " + std::to_string(spec.n));
            for (int attempt = 0; attempt < kGeneratorAttemptCap; ++attempt) {
                Tree t = random_lobster(spec.n, rng);
                if (2 * max_matching(t).size() == spec.n - 1) return t;
            }
            throw Error("generator attempt cap exceeded for lobster_apm, n = " +
                        std::to_string(spec.n));
        }
        case TreeFamily::LobsterPm: {
            if (spec.n % 2 != 0)
                throw Error("family lobster_pm requires even order, got " + std::to_string(spec.n));
            for (int attempt = 0; attempt < kGeneratorAttemptCap; ++attempt) {
                Tree t = random_lobster(spec.n, rng);
                if (2 * max_matching(t).size() == spec.n) return t;
            }
            throw Error("generator attempt cap exceeded for lobster_pm, n = " +
                        std::to_string(spec.n));
        }
    }
    throw Error("unknown tree family");
}

}  // namespace graceful
