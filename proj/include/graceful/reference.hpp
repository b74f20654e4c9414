#pragma once

#include <cstdint>
#include <vector>

#include "graceful/labeling.hpp"
#include "graceful/matching.hpp"
#include "graceful/tree.hpp"

// Slow, obviously-correct counterparts of the main algorithms. They cross
// check the fast paths in tests and serve as serial baselines in the
// benchmark tool.
namespace graceful::ref {

// Count graceful labelings by checking all n! label assignments.
std::uint64_t count_graceful_unpruned(const Tree& t);

// Every matching of t, the empty one included.
std::vector<Matching> all_matchings(const Tree& t);

int max_matching_size_by_enumeration(const Tree& t);

// Isomorphism decided by trying every vertex bijection.
bool isomorphic_by_permutation(const Tree& a, const Tree& b);

// One tree per isomorphism class, found by decoding every length-(n-2)
// sequence over {0..n-1} and deduplicating by canonical code. `parallel`
// fans the first sequence position out across threads; the result is
// ordered by canonical code either way.
std::vector<Tree> enumerate_trees_by_sequences(int n, bool parallel = false);

// Diameter by breadth-first search from every vertex.
int diameter_all_pairs(const Tree& t);

}  // namespace graceful::ref
