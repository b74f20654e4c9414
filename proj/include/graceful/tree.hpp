#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graceful {

// Thrown on invalid inputs: malformed files, precondition violations.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    if (u == v) throw Error("self-loop edge (" + std::to_string(u) + ")");
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Connected acyclic graph on vertices 0..n-1. Immutable after construction.
class Tree {
  public:
    // Validates: ids in range, no duplicate edges, exactly n-1 edges,
    // connected (acyclicity follows). Edges are normalized and sorted.
    Tree(int n, std::vector<Edge> edges);

    // Defaults to the single-vertex tree so aggregates stay valid.
    Tree() : Tree(1, {}) {}

    // Single vertex, no edges.
    static Tree single();

    // Path 0-1-...-(n-1).
    static Tree path(int n);

    // Star with center 0 and leaves 1..n-1.
    static Tree star(int n);

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

  private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

enum class TreeKind { Path, Caterpillar, Lobster, Other };

std::string to_string(TreeKind k);

// kind reflects the exact distance: 0 Path, 1 Caterpillar, 2 Lobster.
// For Other, distance is measured from the canonical longest path.
struct TreeClass {
    TreeKind kind;
    int distance;
};

// Result of reading an edge list with arbitrary vertex ids.
struct ParsedTree {
    Tree tree;
    // original id of each remapped vertex; identity when ids were 0..n-1
    std::vector<std::int64_t> original_ids;
    bool remapped = false;
};

// Edge-list text: optional "n <N>" header, one "u v" pair per line,
// '#' starts a comment, blank lines ignored. Without a header, arbitrary
// ids are remapped to 0..n-1 in ascending order.
ParsedTree parse_tree(const std::string& text);

// Two-coloring by BFS parity from vertex 0; vertex 0 is in class_a.
struct Bipartition {
    std::vector<int> class_a;
    std::vector<int> class_b;
    std::vector<int> side;  // 0 for class_a, 1 for class_b
};

Bipartition bipartition(const Tree& t);

// BFS distances from src.
std::vector<int> bfs_distances(const Tree& t, int src);

int eccentricity(const Tree& t, int v);
int diameter(const Tree& t);

// Vertex sequence of a maximum-length path. Deterministic: BFS sweeps
// break ties on smallest id, and the result starts at its smaller endpoint.
std::vector<int> longest_path(const Tree& t);

// Longest path starting at `anchor`; requires ecc(anchor) == diameter.
std::vector<int> longest_path_from(const Tree& t, int anchor);

// Smallest-id vertex whose eccentricity equals the diameter.
int smallest_longest_path_endpoint(const Tree& t);

// Classification by repeated leaf deletion: a path needs zero rounds,
// a caterpillar one, a lobster two. Beyond that the distance reported is
// the maximum vertex distance to the canonical longest path.
TreeClass classify(const Tree& t);

// Canonical form string; equal iff trees are isomorphic. AHU encoding
// rooted at the centroid (or the pair of centroids).
std::string canonical_code(const Tree& t);

// Tree with vertex i renamed to perm[i]; perm must be a permutation.
Tree permuted(const Tree& t, const std::vector<int>& perm);

}  // namespace graceful
