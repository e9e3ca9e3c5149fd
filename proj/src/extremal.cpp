#include "bintree/extremal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <thread>

#include <json.hpp>

#include "bintree/enumerate.hpp"

namespace bintree {

namespace {

int bfs_distance(const Tree& t, int from, int to) {
    std::vector<int> dist(t.order(), -1);
    std::queue<int> q;
    dist[from] = 0;
    q.push(from);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (v == to) return dist[v];
        for (int u : t.neighbors(v))
            if (dist[u] == -1) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return -1;
}

// Distance sum from start within its component after deleting `banned`.
std::int64_t component_sigma(const Tree& t, int start, int banned) {
    std::vector<int> dist(t.order(), -1);
    std::queue<int> q;
    dist[start] = 0;
    q.push(start);
    std::int64_t sum = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        sum += dist[v];
        for (int u : t.neighbors(v))
            if (dist[u] == -1 && u != banned) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return sum;
}

void require_searchable(const Tree& t) {
    if (t.order() < 4) throw TooSmall("ratio extraction needs order >= 4");
    if (!is_binary(t)) throw Error("ratio extraction expects a binary tree");
}

std::string rooted_caterpillar_code(int m) {
    if (m == 1) return "()";
    auto rc = rooted_binary_caterpillar((m - 1) / 2);
    return rooted_code(rc.tree, rc.root);
}

bool contains(const std::vector<int>& sorted_set, int v) {
    return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

}  // namespace

std::string to_string(RatioKind k) {
    return k == RatioKind::distance ? "distance" : "subtree";
}

std::string to_string(SearchMode m) {
    return m == SearchMode::min ? "min" : "max";
}

RatioWitness min_distance_ratio(const Tree& t) {
    require_searchable(t);
    auto sigma = distance_sums(t);
    auto smin = *std::min_element(sigma.begin(), sigma.end());
    int v = -1, w = -1;
    for (int i = 0; i < t.order(); ++i)
        if (sigma[i] == smin) {
            v = i;
            break;
        }
    for (int leaf : t.leaves())
        if (w == -1 || sigma[leaf] < sigma[w]) w = leaf;
    return {make_ratio(BigCount(static_cast<long>(sigma[w])), BigCount(static_cast<long>(sigma[v]))), w, v};
}

RatioWitness max_distance_ratio(const Tree& t) {
    require_searchable(t);
    auto sigma = distance_sums(t);
    auto smin = *std::min_element(sigma.begin(), sigma.end());
    int v = -1, w = -1;
    for (int i = 0; i < t.order(); ++i)
        if (sigma[i] == smin) {
            v = i;
            break;
        }
    for (int leaf : t.leaves())
        if (w == -1 || sigma[leaf] > sigma[w]) w = leaf;
    return {make_ratio(BigCount(static_cast<long>(sigma[w])), BigCount(static_cast<long>(sigma[v]))), w, v};
}

RatioWitness min_subtree_ratio(const Tree& t) {
    require_searchable(t);
    auto counts = subtree_counts(t);
    auto fmax = *std::max_element(counts.begin(), counts.end());
    int v = -1, w = -1;
    for (int i = 0; i < t.order(); ++i)
        if (counts[i] == fmax) {
            v = i;
            break;
        }
    for (int leaf : t.leaves())
        if (w == -1 || counts[leaf] > counts[w]) w = leaf;
    return {make_ratio(counts[v], counts[w]), w, v};
}

RatioWitness max_subtree_ratio(const Tree& t) {
    require_searchable(t);
    auto counts = subtree_counts(t);
    auto fmax = *std::max_element(counts.begin(), counts.end());
    int v = -1, w = -1;
    for (int i = 0; i < t.order(); ++i)
        if (counts[i] == fmax) {
            v = i;
            break;
        }
    for (int leaf : t.leaves())
        if (w == -1 || counts[leaf] < counts[w]) w = leaf;
    return {make_ratio(counts[v], counts[w]), w, v};
}

ExactRatio theorem_distance_value(int n) {
    if (n < 4 || n % 2 != 0) throw BadOrder("order must be even >= 4, got " + std::to_string(n));
    long nn = n;
    if (n % 4 == 0)
        return make_ratio(BigCount(nn * nn + 12 * nn - 16), BigCount(nn * nn + 4 * nn - 8));
    return make_ratio(BigCount(nn * nn + 12 * nn - 12), BigCount(nn * nn + 4 * nn - 4));
}

ExactRatio theorem_subtree_value(int n) {
    BigCount b = lemma41_bound(n);
    return make_ratio(2 * b, b + 1);
}

std::int64_t closed_form_sigma_T1(int a, int b, int c) {
    for (int s : {a, b, c})
        if (s < 1 || s % 2 == 0)
            throw BadBranchSizes("branch orders must be odd positive");
    std::int64_t sum = 0;
    for (std::int64_t s : {a, b, c}) sum += ((s + 2) * (s + 2) - 5) / 4;
    return sum;
}

std::int64_t closed_form_sigma_T2(int n) {
    if (n < 4 || n % 2 != 0) throw BadOrder("order must be even >= 4, got " + std::to_string(n));
    std::int64_t nn = n;
    if (n % 4 == 0) return (nn * nn + 4 * nn - 8) / 8;
    return (nn * nn + 4 * nn - 4) / 8;
}

BigCount caterpillar_root_subtrees(int k) {
    if (k < 0) throw BadOrder("internal-vertex count must be >= 0, got " + std::to_string(k));
    return 3 * pow2(static_cast<unsigned long>(k)) - 2;
}

BigCount lemma41_bound(int n) {
    if (n < 4 || n % 2 != 0) throw BadOrder("order must be even >= 4, got " + std::to_string(n));
    if (n % 4 == 0) {
        // two branches of order (n-2)/2 each
        BigCount f = caterpillar_root_subtrees((n - 4) / 4);
        return (1 + f) * (1 + f);
    }
    // branches of orders n/2 and (n-4)/2
    BigCount f1 = caterpillar_root_subtrees((n - 2) / 4);
    BigCount f2 = caterpillar_root_subtrees((n - 6) / 4);
    return (1 + f1) * (1 + f2);
}

BigCount lemma42_bound(int n) {
    if (n < 8 || n % 2 != 0) throw BadOrder("order must be even >= 8, got " + std::to_string(n));
    BigCount f = (n % 4 == 0) ? caterpillar_root_subtrees((n - 4) / 4)
                              : caterpillar_root_subtrees((n - 6) / 4);
    return 1 + 2 * (f + 2) * (f + 1);
}

bool ConditionReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

ConditionReport verify_conditions(const Tree& t, int v, int w) {
    int n = t.order();
    if (v < 0 || v >= n || w < 0 || w >= n) throw BadVertex("vertex out of range");
    if (t.degree(w) != 1) throw BadConfiguration("w must be a leaf");
    int d = bfs_distance(t, v, w);
    ConditionReport rep;
    rep.distance = d;
    if (d == 1) {
        if (t.degree(v) != 3) throw BadConfiguration("v must be internal of degree 3");
        std::vector<BigCount> branch;
        for (int u : t.neighbors(v))
            if (u != w) branch.push_back(component_subtree_count(t, u, {v}));
        BigCount f1 = std::max(branch[0], branch[1]);
        BigCount f2 = std::min(branch[0], branch[1]);
        rep.checks.push_back({"F_T1(v1) >= F_T2(v2)", f1 >= f2});
        rep.checks.push_back({"2(1 + F_T2(v2)) >= F_T1(v1)", 2 * (1 + f2) >= f1});
    } else if (d == 2) {
        int x = t.neighbors(w)[0];
        BigCount fv = component_subtree_count(t, v, {x});
        BigCount fx = component_subtree_count(t, x, {v, w});
        rep.checks.push_back({"F_Tv(v) > 2 F_Tx(x)", fv > 2 * fx});
        rep.checks.push_back({"F_Tv(v) == 2 F_Tx(x) + 1", fv == 2 * fx + 1});
    } else {
        throw BadConfiguration("d(v,w) must be 1 or 2, got " + std::to_string(d));
    }
    return rep;
}

bool PropositionReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

PropositionReport verify_propositions(int n_max) {
    if (n_max < 4) throw BadOrder("n_max must be >= 4");
    PropositionReport rep;
    rep.n_max = n_max;
    PropositionCheck centroid_branch{"2.1"}, core_branch{"2.2"}, rooted_sigma_max{"2.3"},
        rooted_count_min{"2.4"}, fixed_split_max{"2.5"};

    for (int n = 4; n <= n_max; n += 2) {
        for (const Tree& t : enumerate_binary_trees(n)) {
            auto mp = middle_parts(t);
            for (int v : mp.centroid)
                for (int u : t.neighbors(v)) {
                    auto [cu, cv] = branch_sizes(t, u, v);
                    ++centroid_branch.instances;
                    bool ok = cv >= cu && ((cv == cu) == contains(mp.centroid, u));
                    if (!ok && centroid_branch.pass) {
                        centroid_branch.pass = false;
                        centroid_branch.counterexample = canonical_code(t) + " at edge (" +
                                                         std::to_string(u) + "," + std::to_string(v) + ")";
                    }
                }
            for (int v : mp.core)
                for (int u : t.neighbors(v)) {
                    BigCount fv = component_subtree_count(t, v, {u});
                    BigCount fu = component_subtree_count(t, u, {v});
                    ++core_branch.instances;
                    bool ok = fv >= fu && ((fv == fu) == contains(mp.core, u));
                    if (!ok && core_branch.pass) {
                        core_branch.pass = false;
                        core_branch.counterexample = canonical_code(t) + " at edge (" +
                                                     std::to_string(u) + "," + std::to_string(v) + ")";
                    }
                }
        }
    }

    for (int m = 3; m < n_max; m += 2) {
        auto rooted = enumerate_rooted_binary_trees(m);
        std::string cat = rooted_caterpillar_code(m);
        std::int64_t cat_sigma = -1;
        BigCount cat_count = -1;
        std::vector<std::int64_t> sigmas;
        std::vector<BigCount> counts;
        // Grouping for 2.5: unordered child-subtree orders -> sigma values.
        std::map<std::pair<int, int>, std::vector<size_t>> by_split;
        std::vector<bool> both_children_caterpillar(rooted.size(), false);
        for (size_t i = 0; i < rooted.size(); ++i) {
            const RootedTree& rt = rooted[i];
            std::int64_t s = distance_sums(rt.tree)[rt.root];
            BigCount f = rooted_subtree_counts(rt)[rt.root];
            sigmas.push_back(s);
            counts.push_back(f);
            std::string code = rooted_code(rt.tree, rt.root);
            if (code == cat) {
                cat_sigma = s;
                cat_count = f;
            }
            auto children = rt.tree.neighbors(rt.root);
            auto [s1, s2] = branch_sizes(rt.tree, children[0], rt.root);
            (void)s2;
            int o1 = s1, o2 = rt.tree.order() - 1 - s1;
            by_split[{std::min(o1, o2), std::max(o1, o2)}].push_back(i);
            bool cats = rooted_code(rt.tree, children[0], rt.root) == rooted_caterpillar_code(o1) &&
                        rooted_code(rt.tree, children[1], rt.root) == rooted_caterpillar_code(o2);
            both_children_caterpillar[i] = cats;
            // decomposition identity: sigma at the root splits over the two branches
            std::int64_t b1 = component_sigma(rt.tree, children[0], rt.root);
            std::int64_t b2 = component_sigma(rt.tree, children[1], rt.root);
            ++fixed_split_max.instances;
            if (s != b1 + o1 + b2 + o2 && fixed_split_max.pass) {
                fixed_split_max.pass = false;
                fixed_split_max.counterexample = code + " sigma decomposition mismatch";
            }
        }
        for (size_t i = 0; i < rooted.size(); ++i) {
            ++rooted_sigma_max.instances;
            if (sigmas[i] > cat_sigma || (sigmas[i] == cat_sigma && rooted_code(rooted[i].tree, 0) != cat)) {
                if (rooted_sigma_max.pass) {
                    rooted_sigma_max.pass = false;
                    rooted_sigma_max.counterexample = rooted_code(rooted[i].tree, 0);
                }
            }
            ++rooted_count_min.instances;
            if (counts[i] < cat_count || (counts[i] == cat_count && rooted_code(rooted[i].tree, 0) != cat)) {
                if (rooted_count_min.pass) {
                    rooted_count_min.pass = false;
                    rooted_count_min.counterexample = rooted_code(rooted[i].tree, 0);
                }
            }
        }
        for (const auto& [split, members] : by_split) {
            std::int64_t best = -1;
            for (size_t i : members) best = std::max(best, sigmas[i]);
            for (size_t i : members) {
                bool is_max = sigmas[i] == best;
                if (is_max != both_children_caterpillar[i] && fixed_split_max.pass) {
                    fixed_split_max.pass = false;
                    fixed_split_max.counterexample =
                        rooted_code(rooted[i].tree, 0) + " split (" + std::to_string(split.first) +
                        "," + std::to_string(split.second) + ")";
                }
            }
        }
    }

    rep.checks = {centroid_branch, core_branch, rooted_sigma_max, rooted_count_min, fixed_split_max};
    return rep;
}

LemmaBoundSweep verify_lemma_bounds(int n) {
    if (n < 4 || n % 2 != 0) throw BadOrder("order must be even >= 4, got " + std::to_string(n));
    LemmaBoundSweep sweep;
    sweep.n = n;
    BigCount bound41 = lemma41_bound(n);
    BigCount bound42 = (n >= 8) ? lemma42_bound(n) : BigCount(0);
    auto fail = [&](const Tree& t, const std::string& why) {
        if (sweep.pass) {
            sweep.pass = false;
            sweep.counterexample = canonical_code(t) + ": " + why;
        }
    };
    for (const Tree& t : enumerate_binary_trees(n)) {
        auto mp = middle_parts(t);
        auto counts = subtree_counts(t);
        for (int v : mp.core) {
            // leaf-neighbor configuration
            for (int w : t.neighbors(v)) {
                if (t.degree(w) != 1) continue;
                if (!verify_conditions(t, v, w).all_hold()) {
                    ++sweep.leaf_cfg_skipped;
                    continue;
                }
                ++sweep.leaf_cfg_checked;
                BigCount fv = component_subtree_count(t, v, {w});
                if (fv < bound41) fail(t, "leaf configuration below bound");
                if (fv == bound41) {
                    ++sweep.leaf_cfg_equality;
                    std::set<int> expected = (n % 4 == 0)
                                                 ? std::set<int>{(n - 2) / 2}
                                                 : std::set<int>{n / 2, (n - 4) / 2};
                    for (int u : t.neighbors(v)) {
                        if (u == w) continue;
                        int order = branch_sizes(t, u, v).first;
                        if (!expected.count(order) ||
                            rooted_code(t, u, v) != rooted_caterpillar_code(order))
                            fail(t, "equality without caterpillar branches");
                    }
                }
            }
            // distance-2 configuration through a non-core neighbor x
            for (int x : t.neighbors(v)) {
                if (contains(mp.core, x)) continue;
                for (int w : t.neighbors(x)) {
                    if (w == v || t.degree(w) != 1) continue;
                    auto rep = verify_conditions(t, v, w);
                    bool cond2 = false;
                    for (const auto& c : rep.checks)
                        if (c.name.find("==") != std::string::npos) cond2 = c.holds;
                    if (!cond2) {
                        ++sweep.dist2_cfg_skipped;
                        continue;
                    }
                    ++sweep.dist2_cfg_checked;
                    if (n < 8) continue;  // bound defined for n >= 8
                    if (counts[w] < bound42) fail(t, "distance-2 configuration below bound");
                    if (counts[w] == bound42) {
                        ++sweep.dist2_cfg_equality;
                        int y = -1;
                        for (int z : t.neighbors(x))
                            if (z != v && z != w) y = z;
                        int ov = branch_sizes(t, v, x).first;
                        int oy = branch_sizes(t, y, x).first;
                        if (rooted_code(t, v, x) != rooted_caterpillar_code(ov) ||
                            rooted_code(t, y, x) != rooted_caterpillar_code(oy))
                            fail(t, "distance-2 equality without caterpillar branches");
                    }
                }
            }
        }
    }
    return sweep;
}

SigmaComparisonSweep verify_sigma_comparison(int n) {
    if (n < 4 || n % 2 != 0) throw BadOrder("order must be even >= 4, got " + std::to_string(n));
    SigmaComparisonSweep sweep;
    sweep.n = n;
    std::int64_t sigma2 = closed_form_sigma_T2(n);
    std::string cat_code = canonical_code(binary_caterpillar(n));
    for (int a = 1; a <= n - 1; a += 2)
        for (int b = a; a + b <= n - 1; b += 2) {
            int c = n - 1 - a - b;
            if (c < b || c % 2 == 0) continue;
            bool branches_fit = 2 * c <= n;
            bool has_x_branch = (a >= 3 && 2 * a < n) || (b >= 3 && 2 * b < n) || (c >= 3 && 2 * c < n);
            if (!branches_fit || !has_x_branch) {
                ++sweep.triples_excluded;
                continue;
            }
            ++sweep.triples_checked;
            std::int64_t sigma1 = closed_form_sigma_T1(a, b, c);
            bool same_tree = canonical_code(three_way_caterpillar(a, b, c).tree) == cat_code;
            bool ok = sigma2 >= sigma1 && ((sigma1 == sigma2) == same_tree);
            if (same_tree) ++sweep.equality_triples;
            if (!ok && sweep.pass) {
                sweep.pass = false;
                sweep.counterexample = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                       std::to_string(c) + ")";
            }
        }
    return sweep;
}

ExtremalRecord search_extremal(int n, RatioKind kind, SearchMode mode, int jobs, int cap) {
    if (n % 2 != 0 || n < 4) throw BadOrder("order must be even >= 4, got " + std::to_string(n));
    if (n > cap) throw CapExceeded("order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    auto codes = binary_tree_codes(n);
    auto trees = enumerate_binary_trees(n);
    auto evaluate = [&](const Tree& t) {
        switch (kind) {
            case RatioKind::distance:
                return mode == SearchMode::min ? min_distance_ratio(t) : max_distance_ratio(t);
            case RatioKind::subtree:
                return mode == SearchMode::min ? min_subtree_ratio(t) : max_subtree_ratio(t);
        }
        throw Error("unreachable");
    };
    struct Partial {
        bool set = false;
        size_t index = 0;
        RatioWitness best;
    };
    auto better = [&](const ExactRatio& a, const ExactRatio& b) {
        return mode == SearchMode::min ? a < b : a > b;
    };
    int workers = std::max(1, jobs);
    std::vector<Partial> partials(workers);
    auto run = [&](int wk) {
        Partial& p = partials[wk];
        for (size_t i = wk; i < codes.size(); i += workers) {
            RatioWitness rw = evaluate(trees[i]);
            if (!p.set || better(rw.ratio, p.best.ratio) ||
                (rw.ratio == p.best.ratio && i < p.index)) {
                p.set = true;
                p.index = i;
                p.best = rw;
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int wk = 0; wk < workers; ++wk) threads.emplace_back(run, wk);
        for (auto& th : threads) th.join();
    }
    Partial merged;
    for (const Partial& p : partials)
        if (p.set && (!merged.set || better(p.best.ratio, merged.best.ratio) ||
                      (p.best.ratio == merged.best.ratio && p.index < merged.index)))
            merged = p;
    ExtremalRecord rec;
    rec.n = n;
    rec.ratio_kind = kind;
    rec.mode = mode;
    rec.best_ratio = merged.best.ratio;
    rec.witness_code = codes[merged.index];
    rec.witness_w = merged.best.w;
    rec.witness_v = merged.best.v;
    rec.trees_examined = codes.size();
    if (mode == SearchMode::min) {
        rec.formula_value = kind == RatioKind::distance ? theorem_distance_value(n)
                                                        : theorem_subtree_value(n);
        rec.matches_formula = (rec.best_ratio == *rec.formula_value);
    }
    return rec;
}

std::string to_json(const ExtremalRecord& rec) {
    nlohmann::json j;
    j["schema"] = "1";
    j["n"] = rec.n;
    j["ratio_kind"] = to_string(rec.ratio_kind);
    j["mode"] = to_string(rec.mode);
    j["best_ratio"] = ratio_str(rec.best_ratio);
    j["witness_code"] = rec.witness_code;
    j["witness_w"] = rec.witness_w;
    j["witness_v"] = rec.witness_v;
    if (rec.formula_value) j["formula_value"] = ratio_str(*rec.formula_value);
    if (rec.matches_formula) j["matches_formula"] = *rec.matches_formula;
    j["trees_examined"] = rec.trees_examined;
    return j.dump();
}

std::string to_json(const PropositionReport& rep) {
    nlohmann::json j;
    j["schema"] = "1";
    j["n_max"] = rep.n_max;
    j["all_pass"] = rep.all_pass();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["pass"] = c.pass;
        jc["instances"] = c.instances;
        if (!c.counterexample.empty()) jc["counterexample"] = c.counterexample;
        j["checks"].push_back(jc);
    }
    return j.dump();
}

std::string csv_header() {
    return "n,ratio_kind,mode,best_ratio,witness_code,witness_w,witness_v,formula_value,"
           "matches_formula,trees_examined";
}

std::string to_csv(const ExtremalRecord& rec) {
    std::string out = std::to_string(rec.n) + "," + to_string(rec.ratio_kind) + "," +
                      to_string(rec.mode) + "," + ratio_str(rec.best_ratio) + "," +
                      rec.witness_code + "," + std::to_string(rec.witness_w) + "," +
                      std::to_string(rec.witness_v) + ",";
    if (rec.formula_value) out += ratio_str(*rec.formula_value);
    out += ",";
    if (rec.matches_formula) out += *rec.matches_formula ? "true" : "false";
    out += "," + std::to_string(rec.trees_examined);
    return out;
}

}  // namespace bintree
