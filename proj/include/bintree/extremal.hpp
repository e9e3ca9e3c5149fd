#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bintree/bigcount.hpp"
#include "bintree/invariants.hpp"
#include "bintree/tree.hpp"

namespace bintree {

enum class RatioKind { distance, subtree };
enum class SearchMode { min, max };

std::string to_string(RatioKind k);
std::string to_string(SearchMode m);

// Extremal ratio of one tree over the designated vertex sets. For the distance
// kind the ratio is sigma(w)/sigma(v) with w a leaf and v a centroid vertex;
// for the subtree kind it is F(v)/F(w) with v a core vertex and w a leaf.
// Ties are broken by smallest sigma(w) (resp. largest/smallest F(w)) and then
// by vertex index.
struct RatioWitness {
    ExactRatio ratio;
    int w = -1;  // leaf
    int v = -1;  // centroid / core vertex
};

RatioWitness min_distance_ratio(const Tree& t);
RatioWitness max_distance_ratio(const Tree& t);
RatioWitness min_subtree_ratio(const Tree& t);
RatioWitness max_subtree_ratio(const Tree& t);

// Closed forms printed in the source theorems, evaluated verbatim.
ExactRatio theorem_distance_value(int n);
ExactRatio theorem_subtree_value(int n);

// Distance sum at the center of a 3-way caterpillar with odd branch orders
// a, b, c; and at a centroid vertex of the binary caterpillar of order n.
std::int64_t closed_form_sigma_T1(int a, int b, int c);
std::int64_t closed_form_sigma_T2(int n);

// Subtrees containing the root of a rooted binary caterpillar with k internal
// vertices: 3*2^k - 2. Extends to k = 0 (a single vertex, count 1).
BigCount caterpillar_root_subtrees(int k);

// Lower bound on F_{T_v}(v) for the leaf-neighbor configuration (even n >= 4)
// and on F_T(w) for the distance-2 configuration (even n >= 8).
BigCount lemma41_bound(int n);
BigCount lemma42_bound(int n);

struct ConditionCheck {
    std::string name;
    bool holds = false;
};

struct ConditionReport {
    int distance = 0;  // d(v, w), 1 or 2
    std::vector<ConditionCheck> checks;
    bool all_hold() const;
};

// Evaluates the side conditions of the two bounding configurations on the
// actual decomposition at (v, w): d=1 checks the two-sided branch inequality,
// d=2 checks core dominance and the exact-doubling condition.
ConditionReport verify_conditions(const Tree& t, int v, int w);

struct PropositionCheck {
    std::string id;
    bool pass = true;
    std::uint64_t instances = 0;
    std::string counterexample;  // canonical code + detail, empty when pass
};

struct PropositionReport {
    int n_max = 0;
    std::vector<PropositionCheck> checks;
    bool all_pass() const;
};

PropositionReport verify_propositions(int n_max);

// Per-order sweep of the two subtree-count lower bounds over every enumerated
// binary tree realizing the respective configuration with its side condition.
struct LemmaBoundSweep {
    int n = 0;
    std::uint64_t leaf_cfg_checked = 0, leaf_cfg_skipped = 0, leaf_cfg_equality = 0;
    std::uint64_t dist2_cfg_checked = 0, dist2_cfg_skipped = 0, dist2_cfg_equality = 0;
    bool pass = true;
    std::string counterexample;
};

LemmaBoundSweep verify_lemma_bounds(int n);

// Sweep of sigma at the center of every admissible 3-way caterpillar of order
// n against the caterpillar closed form.
struct SigmaComparisonSweep {
    int n = 0;
    std::uint64_t triples_checked = 0, triples_excluded = 0, equality_triples = 0;
    bool pass = true;
    std::string counterexample;
};

SigmaComparisonSweep verify_sigma_comparison(int n);

struct ExtremalRecord {
    int n = 0;
    RatioKind ratio_kind = RatioKind::distance;
    SearchMode mode = SearchMode::min;
    ExactRatio best_ratio;
    std::string witness_code;
    int witness_w = -1;
    int witness_v = -1;
    std::optional<ExactRatio> formula_value;  // only for mode == min
    std::optional<bool> matches_formula;
    std::uint64_t trees_examined = 0;
};

// Exhaustive search over one order. Ties between trees go to the smallest
// canonical code; jobs > 1 fans the per-tree evaluation out over threads with
// an associative merge, so the result is independent of the thread count.
ExtremalRecord search_extremal(int n, RatioKind kind, SearchMode mode, int jobs = 1,
                               int cap = 24);

std::string to_json(const ExtremalRecord& rec);
std::string to_json(const PropositionReport& rep);
std::string csv_header();
std::string to_csv(const ExtremalRecord& rec);

}  // namespace bintree
