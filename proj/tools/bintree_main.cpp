#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bintree/enumerate.hpp"
#include "bintree/extremal.hpp"
#include "bintree/invariants.hpp"
#include "bintree/tree.hpp"

using nlohmann::json;
using namespace bintree;

namespace {

constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(kExitUsage);
}

void print_tree(const Tree& t, const std::string& format) {
    if (format == "codes")
        std::cout << canonical_code(t) << "\n";
    else
        std::cout << serialize(t);
}

Tree load_tree(const std::string& file, const std::string& code) {
    if (!code.empty()) {
        if (code.find('(') != std::string::npos) return parse_code(code);
        return parse_edge_list(code);
    }
    std::ifstream in(file);
    if (!in) usage_error("cannot open " + file);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '(') {
        size_t last = text.find_last_not_of(" \t\r\n");
        return parse_code(text.substr(first, last - first + 1));
    }
    return parse_edge_list(text);
}

int run_gen(const std::string& family, int n, int k, std::vector<int> branches,
            const std::string& format) {
    if (family == "caterpillar") {
        if (n < 4 || n % 2 != 0) usage_error("order must be even >= 4");
        print_tree(binary_caterpillar(n), format);
    } else if (family == "rooted-caterpillar") {
        if (k < 1) usage_error("need --k >= 1 internal vertices");
        RootedTree rt = rooted_binary_caterpillar(k);
        if (format == "codes")
            std::cout << rooted_code(rt.tree, rt.root) << "\n";
        else
            std::cout << serialize(rt.tree) << "root=" << rt.root << "\n";
    } else {
        if (branches.size() != 3) usage_error("need --branches a,b,c");
        auto tw = three_way_caterpillar(branches[0], branches[1], branches[2]);
        print_tree(tw.tree, format);
    }
    return 0;
}

int run_invariants(const std::string& file, const std::string& code) {
    Tree t = load_tree(file, code);
    auto sigma = distance_sums(t);
    auto counts = subtree_counts(t);
    auto mp = middle_parts(t);
    json out;
    out["schema"] = "1";
    out["n"] = t.order();
    out["sigma"] = sigma;
    json fc = json::array();
    for (const auto& c : counts) fc.push_back(c.get_str());
    out["subtree_counts"] = fc;
    out["centroid"] = mp.centroid;
    out["core"] = mp.core;
    out["wiener"] = wiener_index(t);
    out["total_subtrees"] = total_subtrees(t).get_str();
    std::cout << out.dump() << "\n";
    return 0;
}

int run_enum(int n, bool count_only) {
    if (n < 2 || n % 2 != 0) usage_error("order must be even >= 2");
    if (count_only) {
        std::cout << count_binary_trees(n) << "\n";
        return 0;
    }
    for (const auto& code : binary_tree_codes(n)) std::cout << code << "\n";
    return 0;
}

int verify_theorem(RatioKind kind, int n_max, int jobs, int cap) {
    bool all_pass = true;
    for (int n = 4; n <= n_max; n += 2) {
        ExtremalRecord rec = search_extremal(n, kind, SearchMode::min, jobs, cap);
        bool witness_ok = rec.witness_code == canonical_code(binary_caterpillar(n));
        bool pass = witness_ok && rec.matches_formula.value_or(false);
        json line = json::parse(to_json(rec));
        line["witness_is_caterpillar"] = witness_ok;
        line["pass"] = pass;
        std::cout << line.dump() << "\n";
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : kExitVerifyFail;
}

int verify_props(int n_max) {
    PropositionReport rep = verify_propositions(n_max);
    std::cout << to_json(rep) << "\n";
    return rep.all_pass() ? 0 : kExitVerifyFail;
}

int verify_lemmas(int n_max) {
    bool all_pass = true;
    for (int n = 4; n <= n_max; n += 2) {
        LemmaBoundSweep bounds = verify_lemma_bounds(n);
        SigmaComparisonSweep sigma = verify_sigma_comparison(n);
        json line{{"schema", "1"},
                  {"n", n},
                  {"leaf_cfg_checked", bounds.leaf_cfg_checked},
                  {"leaf_cfg_equality", bounds.leaf_cfg_equality},
                  {"dist2_cfg_checked", bounds.dist2_cfg_checked},
                  {"dist2_cfg_equality", bounds.dist2_cfg_equality},
                  {"triples_checked", sigma.triples_checked},
                  {"pass", bounds.pass && sigma.pass}};
        if (!bounds.counterexample.empty()) line["counterexample"] = bounds.counterexample;
        if (!sigma.counterexample.empty()) line["counterexample"] = sigma.counterexample;
        std::cout << line.dump() << "\n";
        all_pass = all_pass && bounds.pass && sigma.pass;
    }
    return all_pass ? 0 : kExitVerifyFail;
}

int run_search(const std::string& ratio, const std::string& mode, int n, const std::string& out,
               const std::string& format, int jobs, int cap) {
    if (n < 4 || n % 2 != 0) usage_error("order must be even >= 4");
    RatioKind kind = ratio == "dis" ? RatioKind::distance : RatioKind::subtree;
    SearchMode m = mode == "min" ? SearchMode::min : SearchMode::max;
    ExtremalRecord rec;
    try {
        rec = search_extremal(n, kind, m, jobs, cap);
    } catch (...) {
        if (!out.empty()) std::remove(out.c_str());
        throw;
    }
    if (!out.empty()) {
        std::ofstream sink(out, std::ios::app);
        if (!sink) usage_error("cannot write " + out);
        sink << to_json(rec) << "\n";
    }
    if (format == "csv") {
        std::cout << csv_header() << "\n" << to_csv(rec) << "\n";
    } else if (format == "json") {
        std::cout << to_json(rec) << "\n";
    } else {
        std::cout << "n=" << rec.n << " " << to_string(rec.ratio_kind) << " "
                  << to_string(rec.mode) << " ratio=" << ratio_str(rec.best_ratio)
                  << " witness=" << rec.witness_code << " (w=" << rec.witness_w
                  << ", v=" << rec.witness_v << ") trees=" << rec.trees_examined;
        if (rec.formula_value)
            std::cout << " formula=" << ratio_str(*rec.formula_value)
                      << (rec.matches_formula.value() ? " match" : " MISMATCH");
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and extremal ratios of binary trees"};
    app.require_subcommand(1);

    std::string format = "edges";
    int n = 0, k = 1, n_max = 12, jobs = 1, cap = 24;
    std::vector<int> branches;
    std::string file, code, out, ratio, mode, family, target;
    bool count_only = false;

    auto* gen = app.add_subcommand("gen", "emit a generator-family tree");
    gen->add_option("family", family, "caterpillar | rooted-caterpillar | three-way")
        ->required()
        ->check(CLI::IsMember({"caterpillar", "rooted-caterpillar", "three-way"}));
    gen->add_option("--n", n, "tree order");
    gen->add_option("--k", k, "internal vertices (rooted-caterpillar)");
    gen->add_option("--branches", branches, "branch orders a,b,c")->delimiter(',');
    gen->add_option("--format", format)->check(CLI::IsMember({"edges", "codes"}));

    auto* inv = app.add_subcommand("invariants", "per-vertex invariant profile as JSON");
    inv->add_option("--file", file, "edge-list or code file");
    inv->add_option("--code", code, "tree given inline");

    auto* enm = app.add_subcommand("enum", "enumerate binary trees up to isomorphism");
    enm->add_option("--n", n, "tree order")->required();
    enm->add_flag("--count-only", count_only);

    auto* ver = app.add_subcommand("verify", "re-derive the published statements");
    ver->add_option("target", target, "theorem-dis | theorem-sub | props | lemmas")
        ->required()
        ->check(CLI::IsMember({"theorem-dis", "theorem-sub", "props", "lemmas"}));
    ver->add_option("--n-max", n_max, "largest order swept");
    ver->add_option("--jobs", jobs, "worker threads");
    ver->add_option("--cap", cap, "order cap");

    auto* sea = app.add_subcommand("search", "exhaustive extremal-ratio search");
    sea->add_option("--ratio", ratio)->required()->check(CLI::IsMember({"dis", "sub"}));
    sea->add_option("--mode", mode)->required()->check(CLI::IsMember({"min", "max"}));
    sea->add_option("--n", n, "tree order")->required();
    sea->add_option("--out", out, "append one JSON record per run");
    sea->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
    sea->add_option("--jobs", jobs, "worker threads");
    sea->add_option("--cap", cap, "order cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(family, n, k, branches, format);
        if (inv->parsed()) {
            if (file.empty() == code.empty()) usage_error("need exactly one of --file / --code");
            return run_invariants(file, code);
        }
        if (enm->parsed()) return run_enum(n, count_only);
        if (ver->parsed()) {
            if (n_max > cap) usage_error("--n-max exceeds the cap");
            if (target == "theorem-dis") return verify_theorem(RatioKind::distance, n_max, jobs, cap);
            if (target == "theorem-sub") return verify_theorem(RatioKind::subtree, n_max, jobs, cap);
            if (target == "props") return verify_props(n_max);
            return verify_lemmas(n_max);
        }
        if (sea->parsed()) {
            if (format == "edges") format = "json";
            return run_search(ratio, mode, n, out, format, jobs, cap);
        }
    } catch (const Error& e) {
        usage_error(e.what());
    }
    return 0;
}
