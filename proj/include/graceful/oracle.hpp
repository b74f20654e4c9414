#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "graceful/labeling.hpp"
#include "graceful/matching.hpp"
#include "graceful/tree.hpp"

namespace graceful {

// Exhaustive modes refuse larger trees; label and weight sets are kept in
// 64-bit masks, so 64 is a hard ceiling regardless.
inline constexpr int kMaxExhaustiveOrder = 14;

enum class SearchMode { First, All, Count };

struct SearchOptions {
    SearchMode mode = SearchMode::First;
    // Constraints (at most one):
    std::optional<Matching> strongly;  // strongly graceful w.r.t. this perfect matching
    std::optional<int> zero_at;        // graceful with label 0 at this vertex
    // Keep only one labeling of each complementary pair: the one whose
    // 0-carrying vertex has the smaller id of the weight-(n-1) edge.
    bool up_to_complement = false;
    // Cap on search nodes (successful label placements). Exhaustion is
    // reported as a status, distinct from a completed empty search.
    std::optional<std::uint64_t> node_budget;
    // Count mode without a budget may fan out across label branches.
    bool parallel = false;
    // All mode: when set, labelings stream here instead of accumulating.
    std::function<void(const Labeling&)> sink;
};

enum class SearchStatus { Done, BudgetExhausted };

struct SearchResult {
    SearchStatus status = SearchStatus::Done;
    std::uint64_t count = 0;          // labelings satisfying the constraint
    std::uint64_t nodes_visited = 0;  // successful label placements
    std::vector<Labeling> labelings;  // First: at most one; All: every hit
};

// Backtracking over label assignments, vertices ordered by descending
// degree (id ascending on ties), labels tried ascending. Prunes on reused
// labels and reused weights. Deterministic emission order.
SearchResult brute_force(const Tree& t, const SearchOptions& opts);

struct RotatabilityResult {
    bool rotatable = false;
    SearchStatus status = SearchStatus::Done;
    std::vector<std::optional<Labeling>> witness;  // per vertex, label 0 there
    std::optional<int> failing_vertex;             // first vertex with no labeling
};

// True iff every vertex admits a graceful labeling placing 0 on it.
RotatabilityResult is_zero_rotatable(const Tree& t,
                                     std::optional<std::uint64_t> node_budget = {});

// One representative per isomorphism class on n vertices, ordered by
// canonical code. Grown by leaf augmentation with canonical-code dedup.
std::vector<Tree> enumerate_trees(int n);

inline constexpr int kMaxEnumerationOrder = 13;

// Decode a sequence over {0..n-1} of length n-2 into the labeled tree it
// encodes (n >= 2; the empty sequence gives the single edge).
Tree tree_from_pruefer(const std::vector<int>& seq, int n);

enum class TreeFamily { RandomTree, Caterpillar, Lobster, LobsterApm, LobsterPm };

TreeFamily tree_family_from_string(const std::string& s);
std::string to_string(TreeFamily f);

struct GeneratorSpec {
    TreeFamily family = TreeFamily::RandomTree;
    int n = 1;
    std::uint64_t seed = 0;
};

inline constexpr int kGeneratorAttemptCap = 10000;

// Deterministic for a fixed spec. Families with a matching-size
// requirement draw repeatedly and fail after kGeneratorAttemptCap tries.
Tree generate(const GeneratorSpec& spec);

}  // namespace graceful
