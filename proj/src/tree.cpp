#include "bintree/tree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace bintree {

Tree::Tree(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n <= 0) throw NotATree("vertex count must be positive");
    if (static_cast<int>(edge_list.size()) != n - 1)
        throw NotATree("a tree on " + std::to_string(n) + " vertices needs " +
                       std::to_string(n - 1) + " edges, got " + std::to_string(edge_list.size()));
    adj_.assign(n, {});
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw BadIndex("edge endpoint out of range: (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
        if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw NotATree("duplicate edge");
    }
    // n-1 edges + connected  <=>  tree
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj_[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    if (reached != n) throw NotATree("graph is disconnected");
}

bool Tree::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 1) out.push_back(v);
    if (n_ == 1) out.push_back(0);
    return out;
}

RootedTree::RootedTree(Tree t, int r) : tree(std::move(t)), root(r) {
    if (r < 0 || r >= tree.order()) throw BadIndex("root index out of range");
}

Tree make_tree(int n, const std::vector<std::pair<int, int>>& edge_list) {
    return Tree(n, edge_list);
}

bool is_binary(const Tree& t) {
    if (t.order() == 2) return true;
    for (int v = 0; v < t.order(); ++v) {
        int d = t.degree(v);
        if (d != 1 && d != 3) return false;
    }
    return true;
}

Tree binary_caterpillar(int n) {
    if (n < 4 || n % 2 != 0) throw BadOrder("order must be even >= 4, got " + std::to_string(n));
    int s = (n - 2) / 2;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < s; ++i) e.emplace_back(i, i + 1);
    int next = s;
    for (int i = 0; i < s; ++i) {
        int want = 3 - ((i > 0) + (i + 1 < s));  // leaves needed to reach degree 3
        for (int j = 0; j < want; ++j) e.emplace_back(i, next++);
    }
    return Tree(n, e);
}

RootedTree rooted_binary_caterpillar(int k) {
    if (k < 1) throw BadOrder("internal-vertex count must be >= 1, got " + std::to_string(k));
    int n = 2 * k + 1;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    int next = k;
    for (int i = 0; i < k; ++i) {
        int want = (i == k - 1) ? 2 : 1;
        for (int j = 0; j < want; ++j) e.emplace_back(i, next++);
    }
    return RootedTree(Tree(n, e), 0);
}

ThreeWayCaterpillar three_way_caterpillar(int a, int b, int c) {
    for (int s : {a, b, c})
        if (s < 1 || s % 2 == 0)
            throw BadBranchSizes("branch orders must be odd positive, got " + std::to_string(a) +
                                 "," + std::to_string(b) + "," + std::to_string(c));
    int n = 1 + a + b + c;
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int s : {a, b, c}) {
        int base = next;
        e.emplace_back(0, base);  // center to branch root
        if (s > 1) {
            auto branch = rooted_binary_caterpillar((s - 1) / 2);
            for (auto [u, v] : branch.tree.edges()) e.emplace_back(base + u, base + v);
        }
        next += s;
    }
    return {Tree(n, e), 0};
}

namespace {

// Subtree sizes with respect to an arbitrary root, via iterative DFS.
std::vector<int> subtree_sizes(const Tree& t, int root, std::vector<int>& parent) {
    int n = t.order();
    parent.assign(n, -1);
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int u : t.neighbors(v))
            if (parent[u] == -1) {
                parent[u] = v;
                stack.push_back(u);
            }
    }
    parent[root] = -1;
    std::vector<int> size(n, 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) size[parent[*it]] += size[*it];
    return size;
}

}  // namespace

std::vector<int> size_centroid(const Tree& t) {
    int n = t.order();
    if (n == 1) return {0};
    std::vector<int> parent;
    auto size = subtree_sizes(t, 0, parent);
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        int heaviest = 0;
        for (int u : t.neighbors(v)) {
            int comp = (u == parent[v]) ? n - size[v] : size[u];
            heaviest = std::max(heaviest, comp);
        }
        if (2 * heaviest <= n) out.push_back(v);
    }
    return out;  // ascending by construction; size 1 or 2
}

std::string rooted_code(const Tree& t, int root, int banned_neighbor) {
    if (root < 0 || root >= t.order()) throw BadIndex("root index out of range");
    // Post-order over the component, children codes sorted at each vertex.
    struct Frame {
        int v, parent;
        size_t next_child = 0;
        std::vector<std::string> child_codes;
    };
    std::vector<Frame> stack;
    stack.push_back({root, banned_neighbor});
    std::string result;
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nb = t.neighbors(f.v);
        if (f.next_child < nb.size()) {
            int u = nb[f.next_child++];
            if (u != f.parent) stack.push_back({u, f.v});
            continue;
        }
        std::sort(f.child_codes.begin(), f.child_codes.end());
        std::string code = "(";
        for (const auto& c : f.child_codes) code += c;
        code += ")";
        stack.pop_back();
        if (stack.empty())
            result = std::move(code);
        else
            stack.back().child_codes.push_back(std::move(code));
    }
    return result;
}

std::string canonical_code(const Tree& t) {
    auto c = size_centroid(t);
    if (c.size() == 1) return rooted_code(t, c[0]);
    std::string a = rooted_code(t, c[0], c[1]);
    std::string b = rooted_code(t, c[1], c[0]);
    if (b < a) std::swap(a, b);
    return "(" + a + b + ")";
}

Tree parse_code(const std::string& code) {
    if (code.empty()) throw ParseError("empty code", 0);
    std::vector<std::pair<int, int>> e;
    std::vector<int> stack;
    int next = 0;
    for (size_t i = 0; i < code.size(); ++i) {
        char ch = code[i];
        if (ch == '(') {
            int v = next++;
            if (!stack.empty()) e.emplace_back(stack.back(), v);
            stack.push_back(v);
        } else if (ch == ')') {
            if (stack.empty()) throw ParseError("unmatched ')'", i);
            stack.pop_back();
        } else {
            throw ParseError(std::string("unexpected character '") + ch + "'", i);
        }
    }
    if (!stack.empty()) throw ParseError("unmatched '('", code.size());
    if (next == 0) throw ParseError("empty code", 0);
    return Tree(next, e);
}

std::string serialize(const Tree& t) {
    std::ostringstream os;
    os << "n=" << t.order() << "\n";
    for (auto [u, v] : t.edges()) os << u << " " << v << "\n";
    return os.str();
}

Tree parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string header;
    if (!std::getline(is, header) || header.rfind("n=", 0) != 0)
        throw ParseError("expected header \"n=<count>\"", 0);
    int n = 0;
    try {
        n = std::stoi(header.substr(2));
    } catch (const std::exception&) {
        throw ParseError("bad vertex count in header", 2);
    }
    std::vector<std::pair<int, int>> e;
    std::string line;
    size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw ParseError("bad edge line " + std::to_string(lineno), lineno);
        e.emplace_back(u, v);
    }
    return Tree(n, e);
}

}  // namespace bintree
