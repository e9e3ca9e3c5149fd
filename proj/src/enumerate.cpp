#include "bintree/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bintree {

namespace {

// Memoized shape lists per odd order. Shapes are rooted codes with the
// children of every vertex in sorted order, so string equality is rooted
// isomorphism.
const std::vector<std::string>& shapes(int m) {
    static std::map<int, std::vector<std::string>> cache;
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<std::string> out;
    if (m == 1) {
        out = {"()"};
    } else {
        // Split m-1 descendants into an unordered pair of odd child orders.
        for (int a = 1; a <= (m - 1) / 2; a += 2) {
            int b = m - 1 - a;
            const auto& sa = shapes(a);
            const auto& sb = shapes(b);
            for (size_t i = 0; i < sa.size(); ++i)
                for (size_t j = 0; j < sb.size(); ++j) {
                    if (a == b && sa[i] > sb[j]) continue;
                    const std::string& lo = sa[i] <= sb[j] ? sa[i] : sb[j];
                    const std::string& hi = sa[i] <= sb[j] ? sb[j] : sa[i];
                    out.push_back("(" + lo + hi + ")");
                }
        }
        std::sort(out.begin(), out.end());
    }
    return cache.emplace(m, std::move(out)).first->second;
}

std::set<std::string> binary_code_set(int n) {
    if (n < 2 || n % 2 != 0) throw BadOrder("order must be even >= 2, got " + std::to_string(n));
    std::set<std::string> codes;
    if (n == 2) {
        codes.insert(canonical_code(Tree(2, {{0, 1}})));
        return codes;
    }
    // Every binary tree of order >= 4 is an internal vertex joined to three
    // rooted binary branches of odd orders summing to n-1; duplicates from
    // different internal vertices collapse under the canonical code.
    for (int a = 1; a <= (n - 1) / 3; a += 2)
        for (int b = a; b <= (n - 1 - a) / 2; b += 2) {
            int c = n - 1 - a - b;
            for (const auto& sa : shapes(a))
                for (const auto& sb : shapes(b))
                    for (const auto& sc : shapes(c)) {
                        Tree t = parse_code("(" + sa + sb + sc + ")");
                        codes.insert(canonical_code(t));
                    }
        }
    return codes;
}

}  // namespace

std::vector<std::string> rooted_binary_codes(int m) {
    if (m < 1 || m % 2 == 0) throw BadOrder("rooted order must be odd >= 1, got " + std::to_string(m));
    return shapes(m);
}

std::vector<RootedTree> enumerate_rooted_binary_trees(int m) {
    std::vector<RootedTree> out;
    for (const auto& code : rooted_binary_codes(m)) out.emplace_back(parse_code(code), 0);
    return out;
}

std::vector<std::string> binary_tree_codes(int n) {
    auto s = binary_code_set(n);
    return {s.begin(), s.end()};
}

std::vector<Tree> enumerate_binary_trees(int n) {
    std::vector<Tree> out;
    for (const auto& code : binary_tree_codes(n)) {
        Tree t = parse_code(code);
        if (t.degree(0) != 2) {
            out.push_back(std::move(t));
            continue;
        }
        // Bicentroid codes carry an artificial outer joint; contract it back
        // into the edge between the two component roots.
        auto nb = t.neighbors(0);
        std::vector<std::pair<int, int>> edges{{nb[0] - 1, nb[1] - 1}};
        for (auto [u, v] : t.edges())
            if (u != 0) edges.emplace_back(u - 1, v - 1);
        out.emplace_back(t.order() - 1, edges);
    }
    return out;
}

std::uint64_t count_binary_trees(int n) {
    return binary_code_set(n).size();
}

}  // namespace bintree
