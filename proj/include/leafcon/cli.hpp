#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "report_json.hpp"

namespace leafcon::cli {

namespace detail {

inline std::string read_g6_argument(const std::string& arg, std::istream& in) {
    std::string s = arg;
    if (s == "-") {
        if (!std::getline(in, s)) throw std::runtime_error("no graph6 line on standard input");
    }
    while (!s.empty() &&
           (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    return s;
}

inline int decision_exit_code(Decision d) {
    switch (d) {
        case Decision::yes: return 0;
        case Decision::no: return 1;
        case Decision::budget_exhausted: return 2;
    }
    return 64;
}

// True iff every k-subset of vertices appears among the enumerated leaf sets.
inline bool oracle_says_yes(const Graph& g, int k) {
    const auto sets = oracle_leaf_sets(g);
    std::vector<int> s(static_cast<size_t>(k));
    std::iota(s.begin(), s.end(), 0);
    do {
        uint64_t mask = 0;
        for (int v : s) mask |= uint64_t{1} << v;
        if (sets.count(mask) == 0) return false;
    } while (acceptance::detail::next_subset(s, g.n()));
    return true;
}

}  // namespace detail

// Runs the command line given as plain arguments (no program name). All
// normal output goes to `out`, diagnostics to `err`; `in` backs --g6 -.
inline int cli_run(std::vector<std::string> args, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
    CLI::App app{"exact verification toolkit for k-leaf-connected graphs", "leafcon"};
    app.require_subcommand(1);

    auto* decide = app.add_subcommand("decide", "decide k-leaf-connectivity exactly");
    std::string decide_g6;
    int decide_k = 2;
    long long decide_budget = kDefaultBudget;
    bool decide_oracle = false;
    decide->add_option("--g6", decide_g6, "graph6 string, or - to read one line from stdin")
        ->required();
    decide->add_option("--k", decide_k, "number of leaves k")->required();
    decide->add_option("--budget", decide_budget, "search node budget");
    decide->add_flag("--oracle", decide_oracle,
                     "cross-check against naive spanning-tree enumeration (n <= 9)");

    auto* closure = app.add_subcommand("closure", "compute the degree-sum closure");
    std::string closure_g6;
    int closure_l = 0;
    int closure_k = 0;
    closure->add_option("--g6", closure_g6, "graph6 string, or - for stdin")->required();
    auto* closure_opt_l = closure->add_option("--l", closure_l, "degree-sum threshold l");
    auto* closure_opt_k = closure->add_option("--k", closure_k, "use the threshold l = n+k-1");
    closure_opt_l->excludes(closure_opt_k);
    closure_opt_k->excludes(closure_opt_l);

    auto* conditions = app.add_subcommand("conditions", "evaluate sufficient conditions");
    std::string cond_g6;
    int cond_k = 2;
    bool cond_decide = false;
    long long cond_budget = kDefaultBudget;
    conditions->add_option("--g6", cond_g6, "graph6 string, or - for stdin")->required();
    conditions->add_option("--k", cond_k, "number of leaves k")->required();
    conditions->add_flag("--decide", cond_decide, "also run the exact decider");
    conditions->add_option("--budget", cond_budget, "search node budget for --decide");

    auto* family = app.add_subcommand("family", "construct a named graph family member");
    std::string family_id;
    int family_n = 0;
    int family_k = -1;
    int family_t = -1;
    family->add_option("--id", family_id, "family tag (see README)")->required();
    family->add_option("--n", family_n, "number of vertices")->required();
    family->add_option("--k", family_k, "family parameter k, where applicable");
    family->add_option("--t", family_t, "family parameter t, where applicable");

    auto* spectrum = app.add_subcommand("spectrum", "spectral radii of a graph");
    std::string spectrum_g6;
    double spectrum_tol = kSpectralTol;
    spectrum->add_option("--g6", spectrum_g6, "graph6 string, or - for stdin")->required();
    spectrum->add_option("--tol", spectrum_tol, "eigensolver off-diagonal tolerance");

    auto* scan = app.add_subcommand("scan", "randomized certification scan");
    ScanConfig scan_cfg;
    std::string scan_json_path;
    scan->add_option("--n", scan_cfg.n, "number of vertices")->required();
    scan->add_option("--k", scan_cfg.k, "number of leaves k")->required();
    scan->add_option("--count", scan_cfg.sample_count, "number of samples")->required();
    scan->add_option("--seed", scan_cfg.seed, "base seed")->required();
    scan->add_option("--edge-min", scan_cfg.edge_min,
                     "minimum edge count (default: the three-clique edge threshold)");
    scan->add_flag("--edges-free", scan_cfg.edges_free,
                   "sample edge counts uniformly at or above the minimum");
    scan->add_option("--budget", scan_cfg.budget, "per-sample search node budget");
    scan->add_option("--threads", scan_cfg.parallelism, "worker thread count");
    scan->add_option("--json", scan_json_path, "also write the report to this file");

    auto* verify = app.add_subcommand("verify", "run an acceptance suite");
    std::string verify_suite = "all";
    verify->add_option("--suite", verify_suite, "suite name, or all");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 64;
    }

    try {
        if (decide->parsed()) {
            const Graph g = graph6_decode(detail::read_g6_argument(decide_g6, in));
            const ConnectivityVerdict v = is_k_leaf_connected(g, decide_k, decide_budget);
            ordered_json j;
            j["schema"] = kReportSchema;
            j["command"] = "decide";
            j["graph6"] = graph6_encode(g);
            j["n"] = g.n();
            j["k"] = decide_k;
            j.update(connectivity_verdict_json(v));
            if (decide_oracle) {
                if (g.n() > kOracleVertexLimit)
                    throw std::invalid_argument("--oracle requires n <= " +
                                                std::to_string(kOracleVertexLimit));
                const bool expected = detail::oracle_says_yes(g, decide_k);
                const bool agrees = v.decision != Decision::budget_exhausted &&
                                    (v.decision == Decision::yes) == expected;
                j["oracle"] = ordered_json{{"expected", expected ? "yes" : "no"},
                                           {"agrees", agrees}};
            }
            out << j.dump(2) << "\n";
            return detail::decision_exit_code(v.decision);
        }
        if (closure->parsed()) {
            const Graph g = graph6_decode(detail::read_g6_argument(closure_g6, in));
            if (closure_opt_l->count() == 0 && closure_opt_k->count() == 0)
                throw std::invalid_argument("closure: pass exactly one of --l or --k");
            const ClosureResult cr =
                closure_opt_l->count() > 0 ? l_closure(g, closure_l) : nk_closure(g, closure_k);
            ordered_json j;
            j["schema"] = kReportSchema;
            j["command"] = "closure";
            j["graph6"] = graph6_encode(g);
            j["n"] = g.n();
            j["l"] = cr.l;
            j["closed_graph6"] = graph6_encode(cr.closed_graph);
            ordered_json added = ordered_json::array();
            for (const Edge& e : cr.added_edges) added.push_back({e.first, e.second});
            j["added_edges"] = added;
            j["complete"] = cr.closed_graph.edge_count() ==
                            static_cast<long long>(g.n()) * (g.n() - 1) / 2;
            out << j.dump(2) << "\n";
            return 0;
        }
        if (conditions->parsed()) {
            const Graph g = graph6_decode(detail::read_g6_argument(cond_g6, in));
            const ConditionReport rep = evaluate_conditions(g, cond_k, cond_decide, cond_budget);
            ordered_json j;
            j["schema"] = kReportSchema;
            j["command"] = "conditions";
            j["graph6"] = graph6_encode(g);
            j.update(condition_report_json(rep));
            out << j.dump(2) << "\n";
            if (rep.verdict) return detail::decision_exit_code(rep.verdict->decision);
            return 0;
        }
        if (family->parsed()) {
            const auto id = parse_family_tag(family_id);
            if (!id) {
                err << "unknown family id '" << family_id << "'; known ids:";
                for (const FamilyInfo& info : family_menu()) err << " " << info.tag;
                err << "\n";
                return 64;
            }
            out << graph6_encode(build_family(*id, family_n, family_k, family_t)) << "\n";
            return 0;
        }
        if (spectrum->parsed()) {
            const Graph g = graph6_decode(detail::read_g6_argument(spectrum_g6, in));
            const SpectralReport rep = spectral_report(g, spectrum_tol);
            ordered_json j;
            j["schema"] = kReportSchema;
            j["command"] = "spectrum";
            j["graph6"] = graph6_encode(g);
            j["n"] = g.n();
            j.update(spectral_report_json(rep));
            out << j.dump(2) << "\n";
            return 0;
        }
        if (scan->parsed()) {
            const ScanReport rep = run_scan(scan_cfg);
            const std::string dump = scan_report_json(rep).dump(2) + "\n";
            out << dump;
            if (!scan_json_path.empty()) {
                std::ofstream f(scan_json_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open " + scan_json_path + " for writing");
                f << dump;
            }
            if (rep.summary.anomalies > 0) return 1;
            if (rep.summary.budget_exhausted > 0) return 2;
            return 0;
        }
        if (verify->parsed()) {
            std::vector<acceptance::CriterionResult> results;
            if (verify_suite == "all") {
                results = acceptance::run_all();
            } else {
                const auto& known = acceptance::criteria();
                const bool ok = std::any_of(known.begin(), known.end(), [&](const auto& c) {
                    return verify_suite == c.name;
                });
                if (!ok) {
                    err << "unknown suite '" << verify_suite << "'; available: all";
                    for (const auto& c : known) err << " " << c.name;
                    err << "\n";
                    return 64;
                }
                results.push_back(acceptance::run_criterion(verify_suite));
            }
            bool all_pass = true;
            for (const auto& r : results) {
                out << (r.pass ? "PASS" : "FAIL") << " " << r.name << ": " << r.detail << "\n";
                all_pass = all_pass && r.pass;
            }
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 64;
    }
    return 64;
}

}  // namespace leafcon::cli
