#pragma once

#include <string>
#include <vector>

#include "graceful/matching.hpp"
#include "graceful/tree.hpp"

namespace graceful {

// Vertex labels indexed by vertex id. Distinctness is the verifiers' job,
// not a type invariant.
struct Labeling {
    std::vector<int> values;

    Labeling() = default;
    explicit Labeling(std::vector<int> v) : values(std::move(v)) {}

    int order() const { return static_cast<int>(values.size()); }
    int operator()(int v) const { return values.at(static_cast<std::size_t>(v)); }
    int& operator[](int v) { return values.at(static_cast<std::size_t>(v)); }

    bool operator==(const Labeling&) const = default;
};

struct Violation {
    std::string tag;     // "duplicate label", "label out of range",
                         // "weight multiset mismatch", "matched-pair sum mismatch"
    std::string detail;
};

// ok iff violations is empty. Verifiers report every violation found.
struct VerificationReport {
    bool ok = true;
    std::vector<Violation> violations;

    void add(std::string tag, std::string detail) {
        ok = false;
        violations.push_back({std::move(tag), std::move(detail)});
    }
};

// Sorted multiset { |f(u)-f(v)| : {u,v} edge of t }.
std::vector<int> edge_weights(const Tree& t, const Labeling& f);

// Labels are a permutation of 0..n-1 and weights are exactly {1..n-1}.
VerificationReport verify_graceful(const Tree& t, const Labeling& f);

// verify_graceful plus label sum n-1 on every matched pair. m must be a
// perfect matching of t.
VerificationReport verify_strongly_graceful(const Tree& t, const Labeling& f, const Matching& m);

// v -> (n-1) - f(v). Requires labels in 0..n-1. Involution.
Labeling complement(const Labeling& f);

}  // namespace graceful
