#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bintree/errors.hpp"

namespace bintree {

// Undirected tree on vertex indices 0..n-1. Immutable after construction;
// the constructor validates connectivity and the edge count.
class Tree {
  public:
    Tree(int n, const std::vector<std::pair<int, int>>& edge_list);

    int order() const { return n_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> leaves() const;

  private:
    int n_;
    std::vector<std::vector<int>> adj_;  // each list sorted ascending
};

struct RootedTree {
    Tree tree;
    int root;
    RootedTree(Tree t, int r);
};

Tree make_tree(int n, const std::vector<std::pair<int, int>>& edge_list);

// True iff every vertex has degree 1 or 3 (n = 2, the single edge, counts).
bool is_binary(const Tree& t);

// Binary caterpillar of even order n >= 4: spine vertices 0..s-1 (s = (n-2)/2)
// form a path, leaves are numbered after the spine in spine order. Both spine
// ends carry two leaves, interior spine vertices carry one.
Tree binary_caterpillar(int n);

// Rooted binary caterpillar with k >= 1 internal vertices (2k+1 vertices in
// total). Internal vertices 0..k-1 form the path from the root 0 downwards,
// leaves follow in spine order; the deepest internal vertex has two leaf
// children, every other internal vertex has one leaf child.
RootedTree rooted_binary_caterpillar(int k);

struct ThreeWayCaterpillar {
    Tree tree;
    int center;
};

// Center vertex 0 joined to the roots of three rooted binary caterpillars of
// odd orders a, b, c (order 1 = a single leaf); branch vertices are numbered
// consecutively, each branch spine-first.
ThreeWayCaterpillar three_way_caterpillar(int a, int b, int c);

// Weight centroid: the one or two vertices minimizing the largest component
// of T - v. Coincides with the argmin of the distance sum.
std::vector<int> size_centroid(const Tree& t);

// Parenthesis code of the subtree hanging at root, child codes sorted
// lexicographically; a leaf is "()". banned_neighbor (if >= 0) cuts that edge,
// restricting the code to the component containing root.
std::string rooted_code(const Tree& t, int root, int banned_neighbor = -1);

// Isomorphism-invariant code: rooted code at the centroid vertex when it is
// unique; for a bicentroid, the two component codes sorted and wrapped in one
// outer pair.
std::string canonical_code(const Tree& t);

// Inverse of the code format: the outermost pair becomes vertex 0, children
// are numbered in depth-first order.
Tree parse_code(const std::string& code);

// Edge-list text: "n=<count>" then one "u v" line per edge, u < v, sorted.
std::string serialize(const Tree& t);
Tree parse_edge_list(const std::string& text);

}  // namespace bintree
