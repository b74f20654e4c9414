#include "graceful/tree.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <queue>
#include <sstream>

namespace graceful {

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw Error("vertex count must be at least 1, got " + std::to_string(n_));
    for (auto& e : edges_) {
        if (e.first == e.second) throw Error("self-loop edge (" + std::to_string(e.first) + ")");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= n_)
            throw Error("vertex id out of range: edge (" + std::to_string(e.first) + ", " +
                        std::to_string(e.second) + ") with n = " + std::to_string(n_));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error("duplicate edge");
    const auto m = static_cast<std::size_t>(n_) - 1;
    if (edges_.size() > m)
        throw Error("cyclic: " + std::to_string(edges_.size()) + " edges on " +
                    std::to_string(n_) + " vertices");
    if (edges_.size() < m)
        throw Error("disconnected: " + std::to_string(edges_.size()) + " edges on " +
                    std::to_string(n_) + " vertices");
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    auto dist = bfs_distances(*this, 0);
    if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; }))
        throw Error("disconnected");
}

Tree Tree::single() { return Tree(1, {}); }

Tree Tree::path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Tree(n, std::move(e));
}

Tree Tree::star(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return Tree(n, std::move(e));
}

bool Tree::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string to_string(TreeKind k) {
    switch (k) {
        case TreeKind::Path: return "path";
        case TreeKind::Caterpillar: return "caterpillar";
        case TreeKind::Lobster: return "lobster";
        case TreeKind::Other: return "other";
    }
    return "other";
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::int64_t parse_id(const std::string& tok, int lineno) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
        throw Error("malformed line " + std::to_string(lineno) + ": bad vertex id '" + tok + "'");
    return value;
}

}  // namespace

ParsedTree parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_content = false;
    bool have_header = false;
    std::int64_t header_n = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (!saw_content && toks[0] == "n") {
            saw_content = true;
            if (toks.size() != 2)
                throw Error("malformed line " + std::to_string(lineno) + ": header needs one count");
            header_n = parse_id(toks[1], lineno);
            if (header_n < 1)
                throw Error("malformed line " + std::to_string(lineno) + ": vertex count must be >= 1");
            have_header = true;
            continue;
        }
        saw_content = true;
        if (toks.size() != 2)
            throw Error("malformed line " + std::to_string(lineno) + ": expected 'u v', got '" +
                        line + "'");
        raw.emplace_back(parse_id(toks[0], lineno), parse_id(toks[1], lineno));
    }
    if (!saw_content) throw Error("empty input: no header and no edges");

    if (have_header) {
        const auto n = static_cast<int>(header_n);
        std::vector<Edge> edges;
        edges.reserve(raw.size());
        for (auto [u, v] : raw) {
            if (u >= header_n || v >= header_n)
                throw Error("vertex id out of range: edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") with n = " + std::to_string(header_n));
            edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
        }
        ParsedTree out{Tree(n, std::move(edges)), {}, false};
        out.original_ids.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) out.original_ids[static_cast<std::size_t>(i)] = i;
        return out;
    }

    std::vector<std::int64_t> ids;
    for (auto [u, v] : raw) {
        ids.push_back(u);
        ids.push_back(v);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    const auto n = static_cast<int>(ids.size());
    auto index_of = [&](std::int64_t id) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.push_back(make_edge(index_of(u), index_of(v)));
    bool remapped = ids.back() != n - 1;
    return ParsedTree{Tree(n, std::move(edges)), std::move(ids), remapped};
}

Bipartition bipartition(const Tree& t) {
    Bipartition bp;
    bp.side.assign(static_cast<std::size_t>(t.order()), -1);
    std::queue<int> q;
    q.push(0);
    bp.side[0] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.neighbors(v)) {
            if (bp.side[static_cast<std::size_t>(w)] < 0) {
                bp.side[static_cast<std::size_t>(w)] = 1 - bp.side[static_cast<std::size_t>(v)];
                q.push(w);
            }
        }
    }
    for (int v = 0; v < t.order(); ++v)
        (bp.side[static_cast<std::size_t>(v)] == 0 ? bp.class_a : bp.class_b).push_back(v);
    return bp;
}

std::vector<int> bfs_distances(const Tree& t, int src) {
    std::vector<int> dist(static_cast<std::size_t>(t.order()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

int eccentricity(const Tree& t, int v) {
    auto dist = bfs_distances(t, v);
    return *std::max_element(dist.begin(), dist.end());
}

namespace {

// Farthest vertex from src, smallest id on ties.
int farthest_from(const Tree& t, int src, std::vector<int>* parent = nullptr) {
    auto dist = bfs_distances(t, src);
    if (parent) {
        parent->assign(static_cast<std::size_t>(t.order()), -1);
        for (auto [u, v] : t.edges()) {
            if (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(v)] + 1)
                (*parent)[static_cast<std::size_t>(u)] = v;
            else
                (*parent)[static_cast<std::size_t>(v)] = u;
        }
    }
    int best = src;
    for (int v = 0; v < t.order(); ++v)
        if (dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(best)]) best = v;
    return best;
}

std::vector<int> path_to_root(const std::vector<int>& parent, int from) {
    std::vector<int> path;
    for (int v = from; v >= 0; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    return path;
}

}  // namespace

std::vector<int> longest_path(const Tree& t) {
    if (t.order() == 1) return {0};
    int a = farthest_from(t, 0);
    std::vector<int> parent;
    int b = farthest_from(t, a, &parent);
    auto path = path_to_root(parent, b);  // runs b .. a
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    return path;
}

std::vector<int> longest_path_from(const Tree& t, int anchor) {
    if (anchor < 0 || anchor >= t.order())
        throw Error("anchor " + std::to_string(anchor) + " out of range");
    if (t.order() == 1) return {anchor};
    int a = farthest_from(t, 0);
    int diam = eccentricity(t, a);
    if (eccentricity(t, anchor) != diam)
        throw Error("anchor " + std::to_string(anchor) + " is not an endpoint of any longest path");
    std::vector<int> parent;
    int b = farthest_from(t, anchor, &parent);
    auto path = path_to_root(parent, b);  // runs b .. anchor
    std::reverse(path.begin(), path.end());
    return path;
}

int diameter(const Tree& t) {
    if (t.order() == 1) return 0;
    return eccentricity(t, farthest_from(t, 0));
}

int smallest_longest_path_endpoint(const Tree& t) {
    const int d = diameter(t);
    for (int v = 0; v < t.order(); ++v)
        if (eccentricity(t, v) == d) return v;
    return 0;
}

namespace {

// One pruning round: drop every current leaf. alive/deg are updated in place.
// Returns the number of vertices remaining.
int prune_round(const Tree& t, std::vector<char>& alive, std::vector<int>& deg) {
    std::vector<int> drop;
    for (int v = 0; v < t.order(); ++v)
        if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] <= 1)
            drop.push_back(v);
    for (int v : drop) {
        alive[static_cast<std::size_t>(v)] = 0;
        for (int w : t.neighbors(v))
            if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }
    int remaining = 0;
    for (char a : alive) remaining += a;
    return remaining;
}

bool is_path_subgraph(const Tree& t, const std::vector<char>& alive, const std::vector<int>& deg) {
    for (int v = 0; v < t.order(); ++v)
        if (alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] > 2)
            return false;
    return true;
}

}  // namespace

TreeClass classify(const Tree& t) {
    std::vector<char> alive(static_cast<std::size_t>(t.order()), 1);
    std::vector<int> deg(static_cast<std::size_t>(t.order()));
    for (int v = 0; v < t.order(); ++v) deg[static_cast<std::size_t>(v)] = t.degree(v);

    if (is_path_subgraph(t, alive, deg)) return {TreeKind::Path, 0};
    if (prune_round(t, alive, deg) < 2 || is_path_subgraph(t, alive, deg))
        return {TreeKind::Caterpillar, 1};
    if (prune_round(t, alive, deg) < 2 || is_path_subgraph(t, alive, deg))
        return {TreeKind::Lobster, 2};

    auto spine = longest_path(t);
    std::vector<int> dist(static_cast<std::size_t>(t.order()), -1);
    std::queue<int> q;
    for (int v : spine) {
        dist[static_cast<std::size_t>(v)] = 0;
        q.push(v);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                q.push(w);
            }
        }
    }
    return {TreeKind::Other, *std::max_element(dist.begin(), dist.end())};
}

namespace {

std::vector<int> centroids(const Tree& t) {
    const int n = t.order();
    if (n == 1) return {0};
    std::vector<int> order, parent(static_cast<std::size_t>(n), -1), size(static_cast<std::size_t>(n), 1);
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : t.neighbors(order[i]))
            if (w != parent[static_cast<std::size_t>(order[i])]) {
                parent[static_cast<std::size_t>(w)] = order[i];
                order.push_back(w);
            }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[static_cast<std::size_t>(*it)] >= 0)
            size[static_cast<std::size_t>(parent[static_cast<std::size_t>(*it)])] +=
                size[static_cast<std::size_t>(*it)];
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        int heaviest = n - size[static_cast<std::size_t>(v)];
        for (int w : t.neighbors(v))
            if (w != parent[static_cast<std::size_t>(v)])
                heaviest = std::max(heaviest, size[static_cast<std::size_t>(w)]);
        if (heaviest <= n / 2) out.push_back(v);
    }
    assert(out.size() == 1 || out.size() == 2);
    return out;
}

// AHU code of the subtree at root when the edge to `block` is removed.
// Iterative over a reverse BFS order: children codes are sorted and wrapped.
std::string rooted_code(const Tree& t, int root, int block) {
    std::vector<int> order, parent(static_cast<std::size_t>(t.order()), -2);
    order.push_back(root);
    parent[static_cast<std::size_t>(root)] = -1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : t.neighbors(order[i]))
            if (w != block && parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = order[i];
                order.push_back(w);
            }
    std::vector<std::vector<std::string>> kids(static_cast<std::size_t>(t.order()));
    std::vector<std::string> code(static_cast<std::size_t>(t.order()));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto& k = kids[static_cast<std::size_t>(*it)];
        std::sort(k.begin(), k.end());
        std::string c = "(";
        for (auto& s : k) c += s;
        c += ")";
        code[static_cast<std::size_t>(*it)] = c;
        if (int p = parent[static_cast<std::size_t>(*it)]; p >= 0)
            kids[static_cast<std::size_t>(p)].push_back(std::move(c));
    }
    return code[static_cast<std::size_t>(root)];
}

}  // namespace

std::string canonical_code(const Tree& t) {
    auto cs = centroids(t);
    if (cs.size() == 1) return "1" + rooted_code(t, cs[0], -1);
    auto a = rooted_code(t, cs[0], cs[1]);
    auto b = rooted_code(t, cs[1], cs[0]);
    if (b < a) std::swap(a, b);
    return "2" + a + b;
}

Tree permuted(const Tree& t, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != t.order()) throw Error("permutation size mismatch");
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < t.order(); ++i)
        if (sorted[static_cast<std::size_t>(i)] != i) throw Error("not a permutation");
    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (auto [u, v] : t.edges())
        edges.push_back(make_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]));
    return Tree(t.order(), std::move(edges));
}

}  // namespace graceful
