#include "graceful/matching.hpp"

#include <algorithm>
#include <set>

namespace graceful {

bool is_matching(const Tree& t, const Matching& m) {
    std::vector<char> used(static_cast<std::size_t>(t.order()), 0);
    for (auto [a, b] : m.pairs) {
        if (!t.has_edge(a, b)) return false;
        if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)]) return false;
        used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
    }
    return true;
}

std::vector<int> uncovered(const Tree& t, const Matching& m) {
    std::vector<char> used(static_cast<std::size_t>(t.order()), 0);
    for (auto [a, b] : m.pairs)
        used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
    std::vector<int> out;
    for (int v = 0; v < t.order(); ++v)
        if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

Matching max_matching(const Tree& t) {
    const int n = t.order();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] <= 1) leaves.insert(v);
    }
    auto drop = [&](int v) {
        alive[static_cast<std::size_t>(v)] = 0;
        leaves.erase(v);
        for (int w : t.neighbors(v)) {
            if (!alive[static_cast<std::size_t>(w)]) continue;
            if (--deg[static_cast<std::size_t>(w)] <= 1) leaves.insert(w);
        }
    };
    Matching m;
    while (!leaves.empty()) {
        int v = *leaves.begin();
        leaves.erase(leaves.begin());
        if (!alive[static_cast<std::size_t>(v)]) continue;
        int partner = -1;
        for (int w : t.neighbors(v))
            if (alive[static_cast<std::size_t>(w)]) {
                partner = w;
                break;
            }
        if (partner < 0) {  // isolated remainder, cannot match
            alive[static_cast<std::size_t>(v)] = 0;
            continue;
        }
        m.pairs.push_back(make_edge(v, partner));
        drop(v);
        drop(partner);
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

bool admits_matching_missing(const Tree& t, int v) {
    const int n = t.order();
    if (v < 0 || v >= n) throw Error("vertex " + std::to_string(v) + " out of range");
    Matching m = max_matching(t);
    if (2 * m.size() != n - 1) return false;
    const int w = uncovered(t, m)[0];
    if (w == v) return true;
    // The symmetric difference of two maximum matchings missing w and v
    // is the unique w..v path, so one missing v exists exactly when that
    // path alternates unmatched, matched, ..., matched.
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    for (auto [a, b] : m.pairs) {
        mate[static_cast<std::size_t>(a)] = b;
        mate[static_cast<std::size_t>(b)] = a;
    }
    std::vector<int> parent(static_cast<std::size_t>(n), -2), queue{w};
    parent[static_cast<std::size_t>(w)] = -1;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int x : t.neighbors(queue[i]))
            if (parent[static_cast<std::size_t>(x)] == -2) {
                parent[static_cast<std::size_t>(x)] = queue[i];
                queue.push_back(x);
            }
    std::vector<int> path;  // v back to w
    for (int x = v; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    const std::size_t k = path.size() - 1;  // edge count
    if (k % 2 != 0) return false;
    for (std::size_t i = 0; i < k; ++i) {
        bool matched = mate[static_cast<std::size_t>(path[i])] == path[i + 1];
        if (matched != (i % 2 == 1)) return false;
    }
    return true;
}

Matching matching_missing(const Tree& t, int v) {
    const int n = t.order();
    if (v < 0 || v >= n) throw Error("vertex " + std::to_string(v) + " out of range");
    if (n % 2 == 0) throw Error("no almost perfect matching: order " + std::to_string(n) + " is even");
    if (2 * max_matching(t).size() != n - 1)
        throw Error("no almost perfect matching: maximum matching covers fewer than " +
                    std::to_string(n - 1) + " vertices");

    // Root at v; reverse breadth-first order visits children before parents.
    std::vector<int> order, parent(static_cast<std::size_t>(n), -2);
    order.push_back(v);
    parent[static_cast<std::size_t>(v)] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : t.neighbors(order[i]))
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = order[i];
                order.push_back(w);
            }
    std::vector<std::vector<int>> children(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        if (parent[static_cast<std::size_t>(x)] >= 0)
            children[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])].push_back(x);

    Matching m;
    std::vector<char> matched(static_cast<std::size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        if (matched[static_cast<std::size_t>(x)]) continue;
        for (int c : children[static_cast<std::size_t>(x)]) {  // ascending ids
            if (!matched[static_cast<std::size_t>(c)]) {
                matched[static_cast<std::size_t>(x)] = matched[static_cast<std::size_t>(c)] = 1;
                m.pairs.push_back(make_edge(x, c));
                break;
            }
        }
    }
    // Bottom-up greedy rooted at v is maximum and leaves v uncovered
    // exactly when some maximum matching misses v, so a wrong miss here
    // proves no almost perfect matching misses v.
    auto miss = uncovered(t, m);
    if (miss.size() != 1 || miss[0] != v)
        throw Error("no almost perfect matching misses vertex " + std::to_string(v));
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

ContractionMap contract(const Tree& t, const Matching& m) {
    if (!is_matching(t, m)) throw Error("not a matching of the tree");
    const int n = t.order();
    std::vector<int> mate(static_cast<std::size_t>(n), -1);
    for (auto [a, b] : m.pairs) {
        mate[static_cast<std::size_t>(a)] = b;
        mate[static_cast<std::size_t>(b)] = a;
    }
    // Group key: smallest original id in the (pair or singleton) group.
    std::vector<int> keys;
    for (int x = 0; x < n; ++x)
        if (mate[static_cast<std::size_t>(x)] < 0 || mate[static_cast<std::size_t>(x)] > x)
            keys.push_back(x);
    std::sort(keys.begin(), keys.end());

    ContractionMap cm{Tree::single(), {}, std::vector<int>(static_cast<std::size_t>(n), -1), {}};
    cm.pair_of.resize(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
        int x = keys[i];
        cm.image[static_cast<std::size_t>(x)] = static_cast<int>(i);
        cm.pair_of[i] = {x};
        if (int y = mate[static_cast<std::size_t>(x)]; y >= 0) {
            cm.image[static_cast<std::size_t>(y)] = static_cast<int>(i);
            cm.pair_of[i].push_back(y);
        }
    }
    std::set<Edge> medges(m.pairs.begin(), m.pairs.end());
    std::vector<Edge> cedges;
    for (auto e : t.edges()) {
        if (medges.count(e)) continue;
        Edge ce = make_edge(cm.image[static_cast<std::size_t>(e.first)],
                            cm.image[static_cast<std::size_t>(e.second)]);
        cedges.push_back(ce);
        cm.origin_edge[ce] = e;
    }
    cm.contree = Tree(static_cast<int>(keys.size()), std::move(cedges));
    return cm;
}

}  // namespace graceful
