#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "bintree/enumerate.hpp"
#include "bintree/invariants.hpp"
#include "bintree/tree.hpp"
#include "oracles.hpp"

using namespace bintree;

namespace {
Tree k13() { return binary_caterpillar(4); }
}  // namespace

TEST_CASE("distance sums on fixed trees") {
    auto s = distance_sums(k13());
    CHECK(s == std::vector<std::int64_t>{3, 5, 5, 5});
    Tree t8 = binary_caterpillar(8);
    CHECK(distance_sums(t8)[1] == 11);  // middle spine vertex
}

TEST_CASE("distance sums match BFS on random binary trees") {
    std::mt19937 rng(23);
    for (int i = 0; i < 1000; ++i) {
        int n = 2 * (1 + static_cast<int>(rng() % 20));  // even, <= 40
        Tree t = oracle::random_binary_tree(n, rng);
        CHECK(distance_sums(t) == oracle::distance_sums(t));
    }
}

TEST_CASE("wiener index") {
    CHECK(wiener_index(make_tree(2, {{0, 1}})) == 1);
    CHECK(wiener_index(k13()) == 9);
    Tree t10 = binary_caterpillar(10);
    CHECK(wiener_index(t10) == oracle::wiener_index(t10));
}

TEST_CASE("sigma rerooting identity and pair sum") {
    std::mt19937 rng(29);
    for (int i = 0; i < 200; ++i) {
        Tree t = oracle::random_tree(2 + i % 17, rng);
        auto sigma = distance_sums(t);
        std::int64_t total = 0;
        for (auto s : sigma) total += s;
        CHECK(total == 2 * wiener_index(t));
        for (auto [u, v] : t.edges()) {
            auto [nu, nv] = branch_sizes(t, u, v);
            CHECK(sigma[v] - sigma[u] == nu - nv);
        }
    }
}

TEST_CASE("branch sizes") {
    Tree e = make_tree(2, {{0, 1}});
    CHECK(branch_sizes(e, 0, 1) == std::pair<int, int>{1, 1});
    Tree star = k13();
    CHECK(branch_sizes(star, 1, 0) == std::pair<int, int>{1, 3});
    Tree t12 = binary_caterpillar(12);
    auto [a, b] = branch_sizes(t12, 2, 3);  // middle spine edge of the 5-spine
    CHECK(a + b == 12);
    CHECK(std::min(a, b) == 5);
    CHECK(std::max(a, b) == 7);
    CHECK_THROWS_AS(branch_sizes(star, 1, 2), NotAnEdge);
}

TEST_CASE("rooted subtree counts") {
    auto r1 = rooted_binary_caterpillar(1);
    CHECK(rooted_subtree_counts(r1)[r1.root] == 4);
    auto r5 = rooted_binary_caterpillar(5);
    CHECK(rooted_subtree_counts(r5)[r5.root] == 94);
    for (int v : r5.tree.leaves()) CHECK(rooted_subtree_counts(r5)[v] == 1);
}

TEST_CASE("subtree counts on fixed trees") {
    auto counts = subtree_counts(k13());
    CHECK(counts[0] == 8);
    CHECK(counts[1] == 5);
    Tree t8 = binary_caterpillar(8);
    auto c8 = subtree_counts(t8);
    CHECK(c8[1] == 50);  // middle spine vertex
    int leaf_of_middle = -1;
    for (int u : t8.neighbors(1))
        if (t8.degree(u) == 1) leaf_of_middle = u;
    CHECK(c8[leaf_of_middle] == 26);
}

TEST_CASE("subtree counts match brute force on random trees") {
    std::mt19937 rng(31);
    for (int i = 0; i < 120; ++i) {
        Tree t = oracle::random_tree(2 + i % 15, rng);
        auto tally = oracle::subtree_tally(t);
        CHECK(subtree_counts(t) == tally.per_vertex);
        CHECK(total_subtrees(t) == tally.total);
    }
}

TEST_CASE("subtree counts agree with rooting at each vertex") {
    std::mt19937 rng(37);
    for (int i = 0; i < 100; ++i) {
        Tree t = oracle::random_tree(2 + i % 14, rng);
        auto counts = subtree_counts(t);
        for (int v = 0; v < t.order(); ++v)
            CHECK(counts[v] == rooted_subtree_counts(RootedTree(t, v))[v]);
    }
}

TEST_CASE("total subtrees") {
    CHECK(total_subtrees(make_tree(2, {{0, 1}})) == 3);
    CHECK(total_subtrees(k13()) == 11);
    for (int n = 4; n <= 14; n += 2)
        for (const Tree& t : enumerate_binary_trees(n))
            CHECK(total_subtrees(t) == oracle::subtree_tally(t).total);
}

TEST_CASE("pair subtree counts") {
    CHECK(subtree_count_pair(make_tree(2, {{0, 1}}), 0, 1) == 1);
    CHECK(subtree_count_pair(k13(), 0, 1) == 4);
    CHECK_THROWS_AS(subtree_count_pair(k13(), 1, 1), BadVertex);
    CHECK_THROWS_AS(subtree_count_pair(k13(), 0, 9), BadVertex);
    std::mt19937 rng(41);
    for (int i = 0; i < 60; ++i) {
        int n = 2 + i % 13;
        if (n < 2) continue;
        Tree t = oracle::random_tree(n, rng);
        if (n < 2) continue;
        int u = rng() % n, v = rng() % n;
        if (u == v) v = (v + 1) % n;
        CHECK(subtree_count_pair(t, u, v) == oracle::pair_count(t, u, v));
    }
    // decomposition across an edge: F_T(v) = F_{T_v}(v) + F_T(u,v)
    for (int i = 0; i < 60; ++i) {
        Tree t = oracle::random_tree(3 + i % 12, rng);
        auto counts = subtree_counts(t);
        for (auto [u, v] : t.edges()) {
            CHECK(counts[v] == component_subtree_count(t, v, {u}) + subtree_count_pair(t, u, v));
            CHECK(subtree_count_pair(t, u, v) ==
                  component_subtree_count(t, u, {v}) * component_subtree_count(t, v, {u}));
        }
    }
}

TEST_CASE("middle parts") {
    Tree e = make_tree(2, {{0, 1}});
    auto mp = middle_parts(e);
    CHECK(mp.centroid == std::vector<int>{0, 1});
    CHECK(mp.core == std::vector<int>{0, 1});
    auto mp8 = middle_parts(binary_caterpillar(8));
    CHECK(mp8.centroid == std::vector<int>{1});
    CHECK(mp8.core == std::vector<int>{1});
    auto mp6 = middle_parts(binary_caterpillar(6));
    CHECK(mp6.centroid == std::vector<int>{0, 1});
    auto mp1 = middle_parts(Tree(1, {}));
    CHECK(mp1.centroid == std::vector<int>{0});
    CHECK(mp1.core == std::vector<int>{0});
}

TEST_CASE("middle part structure and leaf extremality on enumerated binary trees") {
    for (int n = 4; n <= 14; n += 2)
        for (const Tree& t : enumerate_binary_trees(n)) {
            auto mp = middle_parts(t);
            CHECK(mp.centroid.size() >= 1);
            CHECK(mp.centroid.size() <= 2);
            CHECK(mp.core.size() >= 1);
            CHECK(mp.core.size() <= 2);
            if (mp.centroid.size() == 2) CHECK(t.has_edge(mp.centroid[0], mp.centroid[1]));
            if (mp.core.size() == 2) CHECK(t.has_edge(mp.core[0], mp.core[1]));
            auto sigma = distance_sums(t);
            auto counts = subtree_counts(t);
            auto smax = *std::max_element(sigma.begin(), sigma.end());
            auto fmin = *std::min_element(counts.begin(), counts.end());
            for (int v = 0; v < t.order(); ++v) {
                if (sigma[v] == smax) CHECK(t.degree(v) == 1);
                if (counts[v] == fmin) CHECK(t.degree(v) == 1);
            }
        }
}

TEST_CASE("profile lower bounds") {
    std::mt19937 rng(43);
    for (int i = 0; i < 100; ++i) {
        int n = 2 + i % 14;
        Tree t = oracle::random_tree(n, rng);
        auto sigma = distance_sums(t);
        auto counts = subtree_counts(t);
        for (int v = 0; v < n; ++v) {
            CHECK(sigma[v] >= n - 1);
            CHECK((sigma[v] == n - 1) == (t.degree(v) == n - 1));
            if (n >= 2) CHECK(counts[v] >= t.degree(v) + 1);
        }
    }
}
