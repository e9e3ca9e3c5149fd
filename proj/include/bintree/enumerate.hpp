#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bintree/tree.hpp"

namespace bintree {

// Canonical rooted codes of all rooted binary trees (every internal vertex,
// the root included, has exactly two children) of odd order m, sorted.
std::vector<std::string> rooted_binary_codes(int m);

std::vector<RootedTree> enumerate_rooted_binary_trees(int m);

// Canonical codes of all unrooted binary trees of even order n, one per
// isomorphism class, sorted ascending.
std::vector<std::string> binary_tree_codes(int n);

// One representative Tree per isomorphism class, in ascending canonical-code
// order; every emitted tree satisfies is_binary.
std::vector<Tree> enumerate_binary_trees(int n);

std::uint64_t count_binary_trees(int n);

}  // namespace bintree
