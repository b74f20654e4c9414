#pragma once

#include <map>
#include <vector>

#include "graceful/tree.hpp"

namespace graceful {

// Vertex-disjoint set of tree edges, stored sorted.
struct Matching {
    std::vector<Edge> pairs;

    bool operator==(const Matching&) const = default;
    int size() const { return static_cast<int>(pairs.size()); }
};

// Every pair is an edge of t and the pairs are vertex-disjoint.
bool is_matching(const Tree& t, const Matching& m);

// Vertices not covered by m, ascending.
std::vector<int> uncovered(const Tree& t, const Matching& m);

// Maximum matching by leaf stripping: repeatedly match the smallest-id
// leaf to its neighbor and remove both. Maximum in trees.
Matching max_matching(const Tree& t);

// Result of merging each matched pair into one vertex.
struct ContractionMap {
    Tree contree;
    // contree vertex -> the original vertices it stands for (1 or 2, sorted)
    std::vector<std::vector<int>> pair_of;
    // original vertex -> contree vertex
    std::vector<int> image;
    // contree edge -> the unique original edge realizing it
    std::map<Edge, Edge> origin_edge;
};

// Whether some almost perfect matching of t leaves exactly v uncovered.
// Not every maximum-length path endpoint qualifies: a pendant vertex
// near the path can force a matching edge that strands the endpoint's
// neighbor. Decided by flipping the unique alternating path from the
// vertex missed by one maximum matching.
bool admits_matching_missing(const Tree& t, int v);

// Almost perfect matching covering every vertex except v. Requires odd
// order, an almost perfect matching to exist, and admits_matching_missing
// to hold at v. Greedy bottom-up matching rooted at v; the
// cover-all-but-v postcondition is checked before returning.
Matching matching_missing(const Tree& t, int v);

// Contree ids are assigned by ascending smallest contained original id.
ContractionMap contract(const Tree& t, const Matching& m);

}  // namespace graceful
