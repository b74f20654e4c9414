#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "graceful/labeling.hpp"
#include "graceful/oracle.hpp"
#include "graceful/rng.hpp"
#include "graceful/tree.hpp"

using namespace graceful;

namespace {

Labeling random_labels(int n, SplitMix64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(rng.below_int(i + 1))]);
    return Labeling(v);
}

bool has_tag(const VerificationReport& rep, const std::string& tag) {
    return std::any_of(rep.violations.begin(), rep.violations.end(),
                       [&](const Violation& v) { return v.tag == tag; });
}

}  // namespace

TEST_CASE("edge_weights returns the sorted weight multiset") {
    CHECK(edge_weights(Tree::path(3), Labeling({0, 2, 1})) == std::vector<int>{1, 2});
    CHECK(edge_weights(Tree::path(2), Labeling({0, 1})) == std::vector<int>{1});
    const Tree star(4, {{0, 3}, {1, 3}, {2, 3}});
    CHECK(edge_weights(star, Labeling({0, 1, 2, 3})) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_WITH_AS(edge_weights(Tree::path(3), Labeling({0, 1})),
                         doctest::Contains("order mismatch"), Error);
}

TEST_CASE("verify_graceful accepts exactly the graceful labelings") {
    CHECK(verify_graceful(Tree::path(2), Labeling({0, 1})).ok);
    CHECK_FALSE(verify_graceful(Tree::path(3), Labeling({0, 1, 2})).ok);
    CHECK(verify_graceful(Tree::path(4), Labeling({0, 3, 1, 2})).ok);
}

TEST_CASE("verify_graceful reports each violation kind") {
    const VerificationReport dup = verify_graceful(Tree::path(3), Labeling({0, 0, 2}));
    CHECK(has_tag(dup, "duplicate label"));

    const VerificationReport range = verify_graceful(Tree::path(3), Labeling({0, 1, 5}));
    CHECK(has_tag(range, "label out of range"));

    const VerificationReport weights = verify_graceful(Tree::path(3), Labeling({0, 1, 2}));
    CHECK(has_tag(weights, "weight multiset mismatch"));
    CHECK(weights.violations.size() == 1);
}

TEST_CASE("verify_strongly_graceful adds the pair-sum condition") {
    CHECK(verify_strongly_graceful(Tree::path(2), Labeling({0, 1}), Matching{{{0, 1}}}).ok);
    CHECK(verify_strongly_graceful(Tree::path(4), Labeling({0, 3, 1, 2}),
                                   Matching{{{0, 1}, {2, 3}}})
              .ok);
    const auto bad = verify_strongly_graceful(Tree::path(4), Labeling({0, 3, 2, 1}),
                                              Matching{{{0, 1}, {2, 3}}});
    CHECK_FALSE(bad.ok);
    CHECK(has_tag(bad, "weight multiset mismatch"));
}

TEST_CASE("verify_strongly_graceful rejects defective matchings") {
    const auto rep = verify_strongly_graceful(Tree::path(4), Labeling({1, 2, 0, 3}),
                                              Matching{{{0, 1}, {2, 3}}});
    CHECK(rep.ok);
    CHECK_THROWS_WITH_AS(verify_strongly_graceful(Tree::path(4), Labeling({0, 3, 1, 2}),
                                                  Matching{{{1, 2}}}),
                         doctest::Contains("not perfect"), Error);
    CHECK_THROWS_WITH_AS(verify_strongly_graceful(Tree::path(4), Labeling({0, 3, 1, 2}),
                                                  Matching{{{0, 2}, {1, 3}}}),
                         doctest::Contains("not a matching"), Error);
}

TEST_CASE("matched-pair sum mismatch is reported with its tag") {
    // Graceful on P6 (weights 2,5,4,3,1) but pair sums are 8, 4, 3.
    const auto bad = verify_strongly_graceful(Tree::path(6), Labeling({3, 5, 0, 4, 1, 2}),
                                              Matching{{{0, 1}, {2, 3}, {4, 5}}});
    CHECK_FALSE(bad.ok);
    CHECK(has_tag(bad, "matched-pair sum mismatch"));
    CHECK_FALSE(has_tag(bad, "weight multiset mismatch"));
}

TEST_CASE("complement mirrors labels at n-1") {
    CHECK(complement(Labeling({0, 2, 1})) == Labeling({2, 0, 1}));
    CHECK(complement(Labeling({0, 4, 1, 3, 2})) == Labeling({4, 0, 3, 1, 2}));
    CHECK(verify_graceful(Tree::path(5), Labeling({4, 0, 3, 1, 2})).ok);
    CHECK_THROWS_WITH_AS(complement(Labeling({0, 3})), doctest::Contains("out of range"), Error);
}

TEST_CASE("complement is an involution and preserves gracefulness") {
    SplitMix64 rng(41);
    for (int n = 1; n <= 10; ++n) {
        GeneratorSpec spec;
        spec.family = TreeFamily::RandomTree;
        spec.n = n;
        spec.seed = rng.next();
        const Tree t = generate(spec);
        for (int rep = 0; rep < 20; ++rep) {
            const Labeling f = random_labels(n, rng);
            CHECK(complement(complement(f)) == f);
            CHECK(verify_graceful(t, f).ok == verify_graceful(t, complement(f)).ok);
        }
    }
}

TEST_CASE("a graceful labeling puts 0 and n-1 on adjacent vertices") {
    for (const Tree& t : enumerate_trees(6)) {
        SearchOptions opts;
        opts.mode = SearchMode::All;
        for (const Labeling& f : brute_force(t, opts).labelings) {
            int lo = -1, hi = -1;
            for (int v = 0; v < t.order(); ++v) {
                if (f(v) == 0) lo = v;
                if (f(v) == t.order() - 1) hi = v;
            }
            REQUIRE(lo >= 0);
            REQUIRE(hi >= 0);
            CHECK(t.has_edge(lo, hi));
        }
    }
}
