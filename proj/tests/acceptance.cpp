// Acceptance sweep: one line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "bintree/enumerate.hpp"
#include "bintree/extremal.hpp"
#include "bintree/invariants.hpp"
#include "bintree/tree.hpp"
#include "oracles.hpp"

using namespace bintree;

namespace {

int failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << idx << ": " << name;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++failures;
}

bool unique_caterpillar_minimum(int n, RatioKind kind, const ExtremalRecord& rec,
                                std::string& detail) {
    // the reported witness must be the caterpillar and every other class must
    // sit strictly above the minimum
    if (rec.witness_code != canonical_code(binary_caterpillar(n))) {
        detail = "witness at n=" + std::to_string(n) + " is not the caterpillar";
        return false;
    }
    for (const Tree& t : enumerate_binary_trees(n)) {
        if (canonical_code(t) == rec.witness_code) continue;
        RatioWitness other =
            kind == RatioKind::distance ? min_distance_ratio(t) : min_subtree_ratio(t);
        if (!(other.ratio > rec.best_ratio)) {
            detail = "minimum tied by a non-caterpillar class at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

void criterion_distance_theorem() {
    bool pass = true;
    std::string detail;
    for (int n = 4; n <= 24 && pass; n += 2) {
        ExtremalRecord rec = search_extremal(n, RatioKind::distance, SearchMode::min);
        if (!rec.matches_formula.value_or(false)) {
            pass = false;
            detail = "n=" + std::to_string(n) + ": search minimum " + ratio_str(rec.best_ratio) +
                     " != closed form " + ratio_str(*rec.formula_value);
            break;
        }
        if (!unique_caterpillar_minimum(n, RatioKind::distance, rec, detail)) pass = false;
        Tree cat = binary_caterpillar(n);
        auto mp = middle_parts(cat);
        bool placed = std::find(mp.centroid.begin(), mp.centroid.end(), rec.witness_v) !=
                          mp.centroid.end() &&
                      cat.degree(rec.witness_w) == 1 && cat.has_edge(rec.witness_v, rec.witness_w);
        if (!placed) {
            pass = false;
            detail = "witness pair misplaced at n=" + std::to_string(n);
        }
    }
    report(1, "distance-ratio minimum matches its closed form on 4..24", pass, detail);
}

void criterion_subtree_theorem() {
    bool pass = true;
    std::string detail;
    for (int n = 4; n <= 24 && pass; n += 2) {
        ExtremalRecord rec = search_extremal(n, RatioKind::subtree, SearchMode::min);
        if (!rec.matches_formula.value_or(false)) {
            pass = false;
            detail = "n=" + std::to_string(n) + ": search minimum " + ratio_str(rec.best_ratio) +
                     " != closed form " + ratio_str(*rec.formula_value);
            break;
        }
        if (!unique_caterpillar_minimum(n, RatioKind::subtree, rec, detail)) pass = false;
    }
    if (pass) {
        pass = search_extremal(8, RatioKind::subtree, SearchMode::min).best_ratio ==
                   make_ratio(BigCount(25), BigCount(13)) &&
               search_extremal(10, RatioKind::subtree, SearchMode::min).best_ratio ==
                   make_ratio(BigCount(55), BigCount(28));
        if (!pass) detail = "spot values at n=8/10 off";
    }
    report(2, "subtree-ratio minimum matches its closed form on 4..24", pass, detail);
}

void criterion_fk() {
    bool pass = true;
    std::string detail;
    for (int k = 1; k <= 20; ++k) {
        RootedTree rt = rooted_binary_caterpillar(k);
        BigCount expect = 3 * pow2(k) - 2;
        if (rooted_subtree_counts(rt)[rt.root] != expect) {
            pass = false;
            detail = "k=" + std::to_string(k);
            break;
        }
    }
    report(3, "rooted caterpillar root count equals 3*2^k - 2 for k <= 20", pass, detail);
}

void criterion_propositions() {
    PropositionReport rep = verify_propositions(16);
    std::string detail;
    for (const auto& c : rep.checks)
        if (!c.pass) detail += c.id + ": " + c.counterexample + "; ";
    report(4, "vertex/neighbor inequalities and rooted-caterpillar extremality", rep.all_pass(),
           detail);
}

void criterion_oracles() {
    bool pass = true;
    std::string detail;
    auto check_tree = [&](const Tree& t, std::mt19937& rng) {
        if (distance_sums(t) != oracle::distance_sums(t)) return false;
        auto tally = oracle::subtree_tally(t);
        if (subtree_counts(t) != tally.per_vertex) return false;
        if (total_subtrees(t) != tally.total) return false;
        int n = t.order();
        for (int reps = 0; reps < 4; ++reps) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u == v) continue;
            if (subtree_count_pair(t, u, v) != oracle::pair_count(t, u, v)) return false;
        }
        return true;
    };
    std::mt19937 rng(97);
    for (int n = 4; n <= 14 && pass; n += 2)
        for (const Tree& t : enumerate_binary_trees(n))
            if (!check_tree(t, rng)) {
                pass = false;
                detail = "enumerated tree at n=" + std::to_string(n);
                break;
            }
    for (int i = 0; i < 500 && pass; ++i) {
        Tree t = oracle::random_tree(2 + i % 17, rng);
        if (!check_tree(t, rng)) {
            pass = false;
            detail = "random tree, trial " + std::to_string(i);
        }
    }
    report(5, "invariants agree with BFS and subset-enumeration oracles", pass, detail);
}

void criterion_enumeration() {
    bool pass = count_binary_trees(4) == 1 && count_binary_trees(6) == 1 &&
                count_binary_trees(8) == 1 && count_binary_trees(10) == 2;
    std::string detail = pass ? "" : "small counts off";
    for (int n = 4; n <= 12 && pass; n += 2)
        if (binary_tree_codes(n) != oracle::prufer_binary_codes(n)) {
            pass = false;
            detail = "class set differs from the labeled oracle at n=" + std::to_string(n);
        }
    report(6, "enumeration matches the labeled-tree oracle up to n = 12", pass, detail);
}

void criterion_lemma_bounds() {
    bool pass = true;
    std::string detail;
    for (int n = 4; n <= 16; n += 2) {
        LemmaBoundSweep sweep = verify_lemma_bounds(n);
        if (!sweep.pass) {
            pass = false;
            detail = sweep.counterexample;
            break;
        }
        if (sweep.leaf_cfg_equality == 0) {
            pass = false;
            detail = "no equality case found at n=" + std::to_string(n);
            break;
        }
    }
    report(7, "configuration lower bounds hold with caterpillar equality, n <= 16", pass, detail);
}

void criterion_structure() {
    bool pass = true;
    std::string detail;
    for (int n = 4; n <= 16 && pass; n += 2)
        for (const Tree& t : enumerate_binary_trees(n)) {
            auto mp = middle_parts(t);
            bool ok = mp.centroid.size() >= 1 && mp.centroid.size() <= 2 && mp.core.size() >= 1 &&
                      mp.core.size() <= 2;
            if (ok && mp.centroid.size() == 2) ok = t.has_edge(mp.centroid[0], mp.centroid[1]);
            if (ok && mp.core.size() == 2) ok = t.has_edge(mp.core[0], mp.core[1]);
            auto sigma = distance_sums(t);
            auto counts = subtree_counts(t);
            auto smax = *std::max_element(sigma.begin(), sigma.end());
            auto fmin = *std::min_element(counts.begin(), counts.end());
            for (int v = 0; v < t.order() && ok; ++v) {
                if (sigma[v] == smax && t.degree(v) != 1) ok = false;
                if (counts[v] == fmin && t.degree(v) != 1) ok = false;
            }
            if (!ok) {
                pass = false;
                detail = "n=" + std::to_string(n) + " code=" + canonical_code(t);
                break;
            }
        }
    report(8, "centroid/core have size 1-2 with adjacency; extremes sit at leaves", pass, detail);
}

}  // namespace

int main() {
    criterion_distance_theorem();
    criterion_subtree_theorem();
    criterion_fk();
    criterion_propositions();
    criterion_oracles();
    criterion_enumeration();
    criterion_lemma_bounds();
    criterion_structure();
    std::cout << (failures == 0 ? "all criteria passed" :
                                  std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
