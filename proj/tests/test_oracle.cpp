#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "graceful/oracle.hpp"
#include "graceful/reference.hpp"

using namespace graceful;

namespace {

std::uint64_t count_of(const Tree& t, SearchOptions opts) {
    opts.mode = SearchMode::Count;
    return brute_force(t, opts).count;
}

}  // namespace

TEST_CASE("brute_force pins small counts and emission order") {
    SearchOptions all;
    all.mode = SearchMode::All;

    auto p2 = brute_force(Tree::path(2), all);
    CHECK(p2.count == 2);
    CHECK(p2.labelings == std::vector<Labeling>{Labeling({0, 1}), Labeling({1, 0})});

    auto p3 = brute_force(Tree::path(3), all);
    CHECK(p3.count == 4);
    CHECK(p3.labelings == std::vector<Labeling>{Labeling({1, 0, 2}), Labeling({2, 0, 1}),
                                                Labeling({0, 2, 1}), Labeling({1, 2, 0})});

    SearchOptions first;
    first.mode = SearchMode::First;
    auto f = brute_force(Tree::path(2), first);
    CHECK(f.status == SearchStatus::Done);
    CHECK(f.labelings == std::vector<Labeling>{Labeling({0, 1})});
}

TEST_CASE("brute_force count matches the unpruned reference") {
    for (int n = 1; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n))
            CHECK(count_of(t, {}) == ref::count_graceful_unpruned(t));
}

TEST_CASE("every emitted labeling verifies") {
    SearchOptions all;
    all.mode = SearchMode::All;
    for (const Tree& t : enumerate_trees(6))
        for (const Labeling& f : brute_force(t, all).labelings)
            CHECK(verify_graceful(t, f).ok);
}

TEST_CASE("up_to_complement halves the count") {
    for (int n = 2; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            SearchOptions utc;
            utc.up_to_complement = true;
            CHECK(2 * count_of(t, utc) == count_of(t, {}));
        }
    SearchOptions all;
    all.mode = SearchMode::All;
    all.up_to_complement = true;
    CHECK(brute_force(Tree::path(3), all).labelings ==
          std::vector<Labeling>{Labeling({1, 0, 2}), Labeling({0, 2, 1})});
}

TEST_CASE("zero_at restricts to labelings grounded at the vertex") {
    SearchOptions at1;
    at1.zero_at = 1;
    CHECK(count_of(Tree::path(3), at1) == 2);
    at1.mode = SearchMode::First;
    auto r = brute_force(Tree::path(3), at1);
    CHECK(r.labelings == std::vector<Labeling>{Labeling({1, 0, 2})});

    for (const Tree& t : enumerate_trees(5)) {
        std::uint64_t total = 0;
        for (int v = 0; v < t.order(); ++v) {
            SearchOptions o;
            o.zero_at = v;
            total += count_of(t, o);
        }
        CHECK(total == count_of(t, {}));
    }
}

TEST_CASE("strongly constrains matched-pair sums") {
    SearchOptions st;
    st.strongly = Matching{{{0, 1}, {2, 3}}};
    CHECK(count_of(Tree::path(4), st) == 4);
    st.mode = SearchMode::All;
    for (const Labeling& f : brute_force(Tree::path(4), st).labelings)
        CHECK(verify_strongly_graceful(Tree::path(4), f, *st.strongly).ok);

    SearchOptions notperfect;
    notperfect.strongly = Matching{{{0, 1}}};
    CHECK_THROWS_WITH_AS(brute_force(Tree::path(4), notperfect),
                         doctest::Contains("not perfect"), Error);
    SearchOptions nonmatching;
    nonmatching.strongly = Matching{{{0, 2}}};
    CHECK_THROWS_WITH_AS(brute_force(Tree::path(4), nonmatching),
                         doctest::Contains("not a matching"), Error);
}

TEST_CASE("constraints are mutually exclusive") {
    SearchOptions both;
    both.strongly = Matching{{{0, 1}}};
    both.zero_at = 0;
    CHECK_THROWS_WITH_AS(brute_force(Tree::path(2), both),
                         doctest::Contains("at most one search constraint"), Error);
}

TEST_CASE("node budget exhaustion is reported as a status") {
    SearchOptions tiny;
    tiny.mode = SearchMode::First;
    tiny.node_budget = 1;
    auto r = brute_force(Tree::path(5), tiny);
    CHECK(r.status == SearchStatus::BudgetExhausted);
    CHECK(r.labelings.empty());
    CHECK(r.nodes_visited == 1);

    SearchOptions zero;
    zero.node_budget = 0;
    CHECK_THROWS_WITH_AS(brute_force(Tree::path(2), zero), doctest::Contains("positive"), Error);
}

TEST_CASE("order caps differ by mode") {
    SearchOptions count;
    count.mode = SearchMode::Count;
    CHECK_THROWS_WITH_AS(brute_force(Tree::path(15), count),
                         doctest::Contains("exhaustive search"), Error);
    SearchOptions first;
    first.mode = SearchMode::First;
    first.node_budget = 100000;
    CHECK_NOTHROW(brute_force(Tree::path(15), first));
    CHECK_THROWS_WITH_AS(brute_force(Tree::path(65), first), doctest::Contains("64"), Error);
}

TEST_CASE("parallel fan-out agrees with the serial count") {
    for (const Tree& t : {Tree::path(7), Tree::star(7),
                          Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}})}) {
        SearchOptions serial;
        serial.mode = SearchMode::Count;
        SearchOptions fan = serial;
        fan.parallel = true;
        CHECK(brute_force(t, serial).count == brute_force(t, fan).count);
    }
}

TEST_CASE("sink streams labelings instead of accumulating them") {
    SearchOptions all;
    all.mode = SearchMode::All;
    auto plain = brute_force(Tree::path(4), all);

    std::vector<Labeling> streamed;
    SearchOptions sunk = all;
    sunk.sink = [&](const Labeling& f) { streamed.push_back(f); };
    auto r = brute_force(Tree::path(4), sunk);
    CHECK(r.labelings.empty());
    CHECK(r.count == plain.count);
    CHECK(streamed == plain.labelings);
}

TEST_CASE("is_zero_rotatable pins small trees and matches per-vertex counts") {
    CHECK(is_zero_rotatable(Tree::path(2)).rotatable);
    CHECK(is_zero_rotatable(Tree::path(3)).rotatable);
    CHECK(is_zero_rotatable(Tree::star(4)).rotatable);

    for (int n = 1; n <= 6; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            auto r = is_zero_rotatable(t);
            bool expected = true;
            for (int v = 0; v < t.order() && expected; ++v) {
                SearchOptions o;
                o.zero_at = v;
                expected = count_of(t, o) > 0;
            }
            CHECK(r.rotatable == expected);
            if (r.rotatable) {
                for (int v = 0; v < t.order(); ++v) {
                    REQUIRE(r.witness[static_cast<std::size_t>(v)].has_value());
                    const Labeling& w = *r.witness[static_cast<std::size_t>(v)];
                    CHECK(w(v) == 0);
                    CHECK(verify_graceful(t, w).ok);
                }
            } else {
                REQUIRE(r.failing_vertex.has_value());
                SearchOptions o;
                o.zero_at = *r.failing_vertex;
                CHECK(count_of(t, o) == 0);
            }
        }
}

TEST_CASE("enumerate_trees pins class counts") {
    const std::size_t expected[11] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_trees(n).size() == expected[n]);
    CHECK_THROWS_WITH_AS(enumerate_trees(0), doctest::Contains("at least 1"), Error);
    CHECK_THROWS_WITH_AS(enumerate_trees(kMaxEnumerationOrder + 1),
                         doctest::Contains("enumeration bound"), Error);
}

TEST_CASE("enumerate_trees yields distinct classes in canonical order") {
    for (int n = 1; n <= 8; ++n) {
        auto trees = enumerate_trees(n);
        std::vector<std::string> codes;
        for (const Tree& t : trees) {
            CHECK(t.order() == n);
            codes.push_back(canonical_code(t));
        }
        CHECK(std::is_sorted(codes.begin(), codes.end()));
        CHECK(std::set<std::string>(codes.begin(), codes.end()).size() == codes.size());

        auto by_seq = ref::enumerate_trees_by_sequences(n);
        REQUIRE(by_seq.size() == trees.size());
        for (std::size_t i = 0; i < trees.size(); ++i)
            CHECK(canonical_code(by_seq[i]) == codes[i]);
    }
    auto serial = ref::enumerate_trees_by_sequences(7, false);
    auto parallel = ref::enumerate_trees_by_sequences(7, true);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i)
        CHECK(serial[i].edges() == parallel[i].edges());
}

TEST_CASE("tree_from_pruefer decodes known sequences") {
    CHECK(tree_from_pruefer({}, 2).edges() == std::vector<Edge>{{0, 1}});
    CHECK(tree_from_pruefer({0, 0, 0}, 5).edges() ==
          std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(tree_from_pruefer({1, 2, 3}, 5).edges() ==
          std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_WITH_AS(tree_from_pruefer({0, 0}, 5), doctest::Contains("length"), Error);
    CHECK_THROWS_WITH_AS(tree_from_pruefer({0, 5, 0}, 5), doctest::Contains("out of range"), Error);
}

TEST_CASE("generate is deterministic and honors family postconditions") {
    for (auto family : {TreeFamily::RandomTree, TreeFamily::Caterpillar, TreeFamily::Lobster}) {
        for (int i = 0; i < 250; ++i) {
            GeneratorSpec spec;
            spec.family = family;
            spec.n = 1 + i % 16;
            spec.seed = 0xABCD0000ULL + static_cast<std::uint64_t>(i);
            Tree t = generate(spec);
            CHECK(t.order() == spec.n);
            CHECK(generate(spec).edges() == t.edges());
            auto cls = classify(t);
            if (family == TreeFamily::Caterpillar) CHECK(cls.distance <= 1);
            if (family == TreeFamily::Lobster) CHECK(cls.distance <= 2);
        }
    }
    for (int i = 0; i < 250; ++i) {
        GeneratorSpec spec;
        spec.family = TreeFamily::LobsterApm;
        spec.n = 1 + 2 * (i % 8);
        spec.seed = 0xBEEF0000ULL + static_cast<std::uint64_t>(i);
        Tree t = generate(spec);
        CHECK(t.order() == spec.n);
        CHECK(classify(t).distance <= 2);
        CHECK(2 * max_matching(t).size() == spec.n - 1);
        CHECK(generate(spec).edges() == t.edges());
    }
    for (int i = 0; i < 250; ++i) {
        GeneratorSpec spec;
        spec.family = TreeFamily::LobsterPm;
        spec.n = 2 + 2 * (i % 8);
        spec.seed = 0xFACE0000ULL + static_cast<std::uint64_t>(i);
        Tree t = generate(spec);
        CHECK(t.order() == spec.n);
        CHECK(classify(t).distance <= 2);
        CHECK(2 * max_matching(t).size() == spec.n);
        CHECK(generate(spec).edges() == t.edges());
    }
}

TEST_CASE("generate rejects impossible parities") {
    GeneratorSpec apm;
    apm.family = TreeFamily::LobsterApm;
    apm.n = 6;
    CHECK_THROWS_WITH_AS(generate(apm), doctest::Contains("odd order"), Error);
    GeneratorSpec pm;
    pm.family = TreeFamily::LobsterPm;
    pm.n = 7;
    CHECK_THROWS_WITH_AS(generate(pm), doctest::Contains("even order"), Error);
    GeneratorSpec bad;
    bad.n = 0;
    CHECK_THROWS_WITH_AS(generate(bad), doctest::Contains("at least 1"), Error);
}

TEST_CASE("tree_family_from_string round-trips") {
    for (auto f : {TreeFamily::RandomTree, TreeFamily::Caterpillar, TreeFamily::Lobster,
                   TreeFamily::LobsterApm, TreeFamily::LobsterPm})
        CHECK(tree_family_from_string(to_string(f)) == f);
    CHECK_THROWS_WITH_AS(tree_family_from_string("shrub"), doctest::Contains("unknown tree family"),
                         Error);
}
