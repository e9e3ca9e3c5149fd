#include "bintree/invariants.hpp"

#include <algorithm>

namespace bintree {

namespace {

// DFS preorder with parent pointers; parent[root] = -1.
std::vector<int> dfs_order(const Tree& t, int root, std::vector<int>& parent) {
    int n = t.order();
    parent.assign(n, -2);
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : t.neighbors(v))
            if (parent[u] == -2) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    return order;
}

}  // namespace

std::vector<std::int64_t> distance_sums(const Tree& t) {
    int n = t.order();
    std::vector<int> parent;
    auto order = dfs_order(t, 0, parent);
    std::vector<int> size(n, 1);
    std::vector<std::int64_t> depth(n, 0), sigma(n, 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    std::int64_t root_sum = 0;
    for (int v : order) {
        if (parent[v] >= 0) depth[v] = depth[parent[v]] + 1;
        root_sum += depth[v];
    }
    sigma[0] = root_sum;
    for (int v : order)
        if (parent[v] >= 0) sigma[v] = sigma[parent[v]] + n - 2 * size[v];
    return sigma;
}

std::int64_t wiener_index(const Tree& t) {
    std::int64_t total = 0;
    for (auto s : distance_sums(t)) total += s;
    return total / 2;
}

std::pair<int, int> branch_sizes(const Tree& t, int u, int v) {
    if (!t.has_edge(u, v)) throw NotAnEdge("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    // Count the component of u in T - uv.
    std::vector<char> seen(t.order(), 0);
    seen[u] = seen[v] = 1;
    std::vector<int> stack{u};
    int cu = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : t.neighbors(x))
            if (!seen[y]) {
                seen[y] = 1;
                ++cu;
                stack.push_back(y);
            }
    }
    return {cu, t.order() - cu};
}

std::vector<BigCount> rooted_subtree_counts(const RootedTree& rt) {
    const Tree& t = rt.tree;
    std::vector<int> parent;
    auto order = dfs_order(t, rt.root, parent);
    std::vector<BigCount> f(t.order(), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) f[parent[*it]] *= 1 + f[*it];
    return f;
}

std::vector<BigCount> subtree_counts(const Tree& t) {
    int n = t.order();
    std::vector<int> parent;
    auto order = dfs_order(t, 0, parent);
    std::vector<BigCount> down(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) down[parent[*it]] *= 1 + down[*it];
    // up[v]: subtrees containing parent(v) in the tree with v's branch removed.
    std::vector<BigCount> up(n, 0);
    for (int v : order) {
        std::vector<int> children;
        for (int u : t.neighbors(v))
            if (u != parent[v]) children.push_back(u);
        if (children.empty()) continue;
        size_t m = children.size();
        // prefix/suffix products of (1 + down[child]); no division anywhere
        std::vector<BigCount> pre(m + 1, 1), suf(m + 1, 1);
        for (size_t i = 0; i < m; ++i) pre[i + 1] = pre[i] * (1 + down[children[i]]);
        for (size_t i = m; i-- > 0;) suf[i] = suf[i + 1] * (1 + down[children[i]]);
        BigCount above = (v == 0) ? BigCount(1) : BigCount(1 + up[v]);
        for (size_t i = 0; i < m; ++i) up[children[i]] = above * pre[i] * suf[i + 1];
    }
    std::vector<BigCount> result(n);
    for (int v = 0; v < n; ++v)
        result[v] = down[v] * ((v == 0) ? BigCount(1) : BigCount(1 + up[v]));
    return result;
}

BigCount total_subtrees(const Tree& t) {
    std::vector<int> parent;
    auto order = dfs_order(t, 0, parent);
    std::vector<BigCount> down(t.order(), 1);
    BigCount total = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (parent[*it] >= 0) down[parent[*it]] *= 1 + down[*it];
        total += down[*it];
    }
    return total;
}

BigCount subtree_count_pair(const Tree& t, int u, int v) {
    int n = t.order();
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw BadVertex("need two distinct valid vertices");
    std::vector<int> parent;
    auto order = dfs_order(t, u, parent);
    std::vector<BigCount> down(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) down[parent[*it]] *= 1 + down[*it];
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());  // u ... v
    // A subtree containing u and v is the path plus, at each path vertex, an
    // optional subtree into each off-path branch.
    BigCount count = 1;
    for (size_t i = 0; i < path.size(); ++i) {
        int p = path[i];
        int toward = (i + 1 < path.size()) ? path[i + 1] : -1;
        for (int c : t.neighbors(p))
            if (c != parent[p] && c != toward) count *= 1 + down[c];
    }
    return count;
}

BigCount component_subtree_count(const Tree& t, int v, const std::vector<int>& banned) {
    int n = t.order();
    if (v < 0 || v >= n) throw BadVertex("vertex out of range");
    std::vector<char> blocked(n, 0);
    for (int b : banned) {
        if (b < 0 || b >= n) throw BadVertex("banned vertex out of range");
        blocked[b] = 1;
    }
    if (blocked[v]) throw BadVertex("vertex itself is banned");
    std::vector<int> parent(n, -2), order;
    parent[v] = -1;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (int y : t.neighbors(x))
            if (parent[y] == -2 && !blocked[y]) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    std::vector<BigCount> f(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) f[parent[*it]] *= 1 + f[*it];
    return f[v];
}

MiddleParts middle_parts(const Tree& t) {
    auto sigma = distance_sums(t);
    auto counts = subtree_counts(t);
    MiddleParts mp;
    auto smin = *std::min_element(sigma.begin(), sigma.end());
    auto fmax = *std::max_element(counts.begin(), counts.end());
    for (int v = 0; v < t.order(); ++v) {
        if (sigma[v] == smin) mp.centroid.push_back(v);
        if (counts[v] == fmax) mp.core.push_back(v);
    }
    return mp;
}

}  // namespace bintree
