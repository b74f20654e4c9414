#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "graceful/oracle.hpp"
#include "graceful/reference.hpp"
#include "graceful/rng.hpp"
#include "graceful/tree.hpp"

using namespace graceful;

namespace {

Tree lobster7() { return Tree(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {5, 6}}); }

std::vector<int> random_permutation(int n, SplitMix64& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(rng.below_int(i + 1))]);
    return p;
}

}  // namespace

TEST_CASE("make_edge normalizes endpoint order") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK(make_edge(1, 3) == Edge{1, 3});
    CHECK_THROWS_AS(make_edge(2, 2), Error);
}

TEST_CASE("tree construction validates its input") {
    CHECK_NOTHROW(Tree(2, {{0, 1}}));
    CHECK_THROWS_WITH_AS(Tree(0, {}), doctest::Contains("vertex count"), Error);
    CHECK_THROWS_WITH_AS(Tree(2, {{0, 2}}), doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(Tree(3, {{0, 1}, {1, 0}}), doctest::Contains("duplicate"), Error);
    CHECK_THROWS_WITH_AS(Tree(3, {{0, 1}}), doctest::Contains("disconnected"), Error);
    CHECK_THROWS_WITH_AS(Tree(3, {{0, 1}, {1, 2}, {0, 2}}), doctest::Contains("cyclic"), Error);
    // Right edge count, still two components: a triangle plus an isolate.
    CHECK_THROWS_WITH_AS(Tree(4, {{0, 1}, {1, 2}, {0, 2}}), doctest::Contains("disconnected"),
                         Error);
}

TEST_CASE("factories build the expected shapes") {
    CHECK(Tree::single().order() == 1);
    CHECK(Tree::single().edges().empty());
    const Tree p = Tree::path(4);
    CHECK(p.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
    const Tree s = Tree::star(4);
    CHECK(s.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    CHECK(s.degree(0) == 3);
    CHECK(s.has_edge(2, 0));
    CHECK_FALSE(s.has_edge(1, 2));
}

TEST_CASE("neighbors are sorted ascending") {
    const Tree t = lobster7();
    CHECK(t.neighbors(2) == std::vector<int>{1, 3, 5});
    CHECK(t.degree(2) == 3);
}

TEST_CASE("parse_tree reads the header form") {
    const ParsedTree a = parse_tree("n 2\n0 1\n");
    CHECK(a.tree.order() == 2);
    CHECK(a.tree.edges() == std::vector<Edge>{{0, 1}});
    CHECK_FALSE(a.remapped);

    const ParsedTree p5 = parse_tree("n 5\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(p5.tree.edges() == Tree::path(5).edges());

    CHECK_THROWS_WITH_AS(parse_tree("n 4\n0 1\n2 3\n"), doctest::Contains("disconnected"), Error);
}

TEST_CASE("parse_tree remaps sparse ids and keeps the originals") {
    const ParsedTree t = parse_tree("10 20\n20 35\n");
    CHECK(t.tree.order() == 3);
    CHECK(t.remapped);
    CHECK(t.original_ids == std::vector<std::int64_t>{10, 20, 35});
    CHECK(t.tree.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}

TEST_CASE("parse_tree strips comments and rejects bad tokens") {
    const ParsedTree t = parse_tree("# a path\nn 3\n0 1  # first\n1 2\n");
    CHECK(t.tree.order() == 3);
    CHECK_THROWS_WITH_AS(parse_tree("n 3\n0 x\n1 2\n"), doctest::Contains("malformed line"),
                         Error);
    CHECK_THROWS_AS(parse_tree("   \n# only comments\n"), Error);
    CHECK(parse_tree("n 1\n").tree.order() == 1);
}

TEST_CASE("bipartition colors by breadth-first parity from vertex 0") {
    const Bipartition p2 = bipartition(Tree::path(2));
    CHECK(p2.class_a == std::vector<int>{0});
    CHECK(p2.class_b == std::vector<int>{1});

    const Bipartition p5 = bipartition(Tree::path(5));
    CHECK(p5.class_a == std::vector<int>{0, 2, 4});
    CHECK(p5.class_b == std::vector<int>{1, 3});
    CHECK(p5.side == std::vector<int>{0, 1, 0, 1, 0});

    const Bipartition s = bipartition(Tree::star(4));
    CHECK(s.class_a == std::vector<int>{0});
    CHECK(s.class_b == std::vector<int>{1, 2, 3});
}

TEST_CASE("bipartition is a proper two-coloring") {
    for (const Tree& t : enumerate_trees(7)) {
        const Bipartition b = bipartition(t);
        for (auto [u, v] : t.edges()) CHECK(b.side[u] != b.side[v]);
        CHECK(b.class_a.size() + b.class_b.size() == static_cast<std::size_t>(t.order()));
    }
}

TEST_CASE("longest_path uses a double sweep with smallest-id ties") {
    CHECK(longest_path(Tree::path(5)) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(longest_path(Tree::star(4)) == std::vector<int>{1, 0, 2});
    CHECK(longest_path_from(Tree::path(5), 4) == std::vector<int>{4, 3, 2, 1, 0});
    CHECK(longest_path_from(lobster7(), 6) == std::vector<int>{6, 5, 2, 1, 0});
    CHECK_THROWS_WITH_AS(longest_path_from(Tree::star(4), 0),
                         doctest::Contains("not an endpoint"), Error);
}

TEST_CASE("longest_path length matches all-pairs breadth-first diameter") {
    for (int n = 1; n <= 9; ++n)
        for (const Tree& t : enumerate_trees(n)) {
            const auto p = longest_path(t);
            CHECK(static_cast<int>(p.size()) - 1 == ref::diameter_all_pairs(t));
            CHECK(diameter(t) == ref::diameter_all_pairs(t));
        }
}

TEST_CASE("eccentricity and canonical endpoint") {
    const Tree t = lobster7();
    CHECK(eccentricity(t, 0) == 4);
    CHECK(eccentricity(t, 2) == 2);
    CHECK(diameter(t) == 4);
    CHECK(smallest_longest_path_endpoint(t) == 0);
    CHECK(smallest_longest_path_endpoint(Tree::single()) == 0);
}

TEST_CASE("classify separates paths, caterpillars, lobsters and the rest") {
    const TreeClass p5 = classify(Tree::path(5));
    CHECK(p5.kind == TreeKind::Path);
    CHECK(p5.distance == 0);

    const TreeClass star = classify(Tree::star(4));
    CHECK(star.kind == TreeKind::Caterpillar);
    CHECK(star.distance == 1);

    const TreeClass lob = classify(lobster7());
    CHECK(lob.kind == TreeKind::Lobster);
    CHECK(lob.distance == 2);

    CHECK(classify(Tree::single()).kind == TreeKind::Path);
    CHECK(classify(Tree::path(2)).kind == TreeKind::Path);

    // Leg of length 3 hanging off a long path: distance 3 from it.
    const Tree deep(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {3, 7}, {7, 8}, {8, 9}});
    const TreeClass far = classify(deep);
    CHECK(far.kind == TreeKind::Other);
    CHECK(far.distance == 3);
}

TEST_CASE("classify is isomorphism invariant") {
    SplitMix64 rng(12345);
    for (const Tree& t : enumerate_trees(7)) {
        const TreeClass base = classify(t);
        for (int rep = 0; rep < 5; ++rep) {
            const Tree q = permuted(t, random_permutation(t.order(), rng));
            const TreeClass c = classify(q);
            CHECK(c.kind == base.kind);
            CHECK(c.distance == base.distance);
        }
    }
}

TEST_CASE("canonical_code identifies isomorphic trees") {
    const Tree p3 = Tree::path(3);
    const Tree relabeled(3, {{0, 2}, {2, 1}});
    CHECK(canonical_code(p3) == canonical_code(relabeled));
    CHECK(canonical_code(Tree::path(4)) != canonical_code(Tree::star(4)));

    std::set<std::string> codes;
    for (const Tree& t : {Tree(3, {{0, 1}, {1, 2}}), Tree(3, {{0, 1}, {0, 2}}),
                          Tree(3, {{0, 2}, {1, 2}})})
        codes.insert(canonical_code(t));
    CHECK(codes.size() == 1);
}

TEST_CASE("canonical_code is invariant under permutation and separates classes") {
    SplitMix64 rng(987);
    const auto trees = enumerate_trees(7);
    std::set<std::string> codes;
    for (const Tree& t : trees) {
        const std::string code = canonical_code(t);
        codes.insert(code);
        for (int rep = 0; rep < 3; ++rep)
            CHECK(canonical_code(permuted(t, random_permutation(t.order(), rng))) == code);
    }
    CHECK(codes.size() == trees.size());
}

TEST_CASE("canonical_code agrees with permutation-search isomorphism") {
    const auto trees = enumerate_trees(6);
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (std::size_t j = i; j < trees.size(); ++j) {
            const bool same_code = canonical_code(trees[i]) == canonical_code(trees[j]);
            CHECK(same_code == ref::isomorphic_by_permutation(trees[i], trees[j]));
        }
}

TEST_CASE("permuted validates the permutation") {
    const Tree t = Tree::path(3);
    CHECK(permuted(t, {2, 1, 0}).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(permuted(t, {0, 0, 1}), Error);
    CHECK_THROWS_AS(permuted(t, {0, 1}), Error);
}

TEST_CASE("bfs_distances reports unreachable as such within the api") {
    const auto d = bfs_distances(Tree::path(4), 2);
    CHECK(d == std::vector<int>{2, 1, 0, 1});
}
