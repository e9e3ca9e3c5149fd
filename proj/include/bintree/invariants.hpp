#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bintree/bigcount.hpp"
#include "bintree/tree.hpp"

namespace bintree {

// sigma_T(v) for every vertex: one rooted pass plus a rerooting sweep using
// sigma(child) = sigma(parent) + n - 2*size(child).
std::vector<std::int64_t> distance_sums(const Tree& t);

// Sum of distances over unordered pairs; equals half the sum of distance sums.
std::int64_t wiener_index(const Tree& t);

// Component orders of T - uv as (n_uv(u), n_uv(v)); they sum to n.
std::pair<int, int> branch_sizes(const Tree& t, int u, int v);

// f(v) = number of subtrees of the subtree below v that contain v,
// f(v) = prod over children c of (1 + f(c)), f(leaf) = 1.
std::vector<BigCount> rooted_subtree_counts(const RootedTree& rt);

// F_T(v) for every vertex, by rerooting the product DP with sibling
// prefix/suffix products (no division).
std::vector<BigCount> subtree_counts(const Tree& t);

// F(T): every subtree counted once, at its topmost vertex w.r.t. a fixed root.
BigCount total_subtrees(const Tree& t);

// Number of subtrees containing both u and v (the whole path between them).
BigCount subtree_count_pair(const Tree& t, int u, int v);

// Subtrees containing v inside the component of v after cutting the edges
// from v's component to each vertex in banned. Plain F_T(v) when banned is
// empty; F_{T_v}(v) of the propositions when banned = {the neighbor u}.
BigCount component_subtree_count(const Tree& t, int v, const std::vector<int>& banned);

struct MiddleParts {
    std::vector<int> centroid;  // argmin of sigma_T, ascending
    std::vector<int> core;      // argmax of F_T, ascending
};

MiddleParts middle_parts(const Tree& t);

}  // namespace bintree
