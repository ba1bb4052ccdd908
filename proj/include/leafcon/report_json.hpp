#pragma once

#include <json.hpp>

#include "conditions.hpp"
#include "scan.hpp"
#include "spectral.hpp"

namespace leafcon {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "leafcon/1";

inline ordered_json edge_flag_json(const EdgeFlag& f) {
    ordered_json j;
    j["applicable"] = f.applicable;
    if (f.applicable) {
        j["holds"] = f.holds;
        j["value"] = f.value;
        j["threshold"] = f.threshold;
    }
    return j;
}

inline ordered_json real_flag_json(const RealFlag& f) {
    ordered_json j;
    j["applicable"] = f.applicable;
    if (f.applicable) {
        j["holds"] = f.holds;
        j["value"] = f.value;
        j["threshold"] = f.threshold;
    }
    return j;
}

inline ordered_json degree_flag_json(const DegreeFlag& f) {
    ordered_json j;
    j["applicable"] = f.applicable;
    if (f.applicable) {
        j["holds"] = f.holds;
        if (f.violating_i) j["violating_i"] = *f.violating_i;
    }
    return j;
}

inline ordered_json leaf_verdict_json(const LeafVerdict& v) {
    ordered_json j;
    j["decision"] = to_string(v.decision);
    if (v.witness_parent) j["witness_parent"] = *v.witness_parent;
    if (v.refutation) j["refutation"] = to_string(*v.refutation);
    j["expansions"] = v.expansions;
    j["searched"] = v.searched;
    return j;
}

inline ordered_json connectivity_verdict_json(const ConnectivityVerdict& v) {
    ordered_json j;
    j["decision"] = to_string(v.decision);
    if (v.failing_set) j["failing_set"] = *v.failing_set;
    if (v.connectivity) j["connectivity"] = *v.connectivity;
    j["rejected_by_connectivity"] = v.rejected_by_connectivity;
    j["sets_fast"] = v.stats.fast;
    j["sets_searched"] = v.stats.searched;
    j["expansions"] = v.expansions;
    return j;
}

inline ordered_json spectral_report_json(const SpectralReport& r) {
    ordered_json j;
    j["rho"] = r.rho;
    j["q"] = r.q;
    j["rho_complement"] = r.rho_complement;
    j["tolerance"] = r.tolerance;
    return j;
}

inline ordered_json condition_report_json(const ConditionReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["edges"] = r.edges;
    j["min_degree"] = r.min_degree;
    j["connectivity"] = r.connectivity;
    j["necessary"] = {{"min_degree_ok", r.min_degree_ok}, {"connectivity_ok", r.connectivity_ok}};
    ordered_json s;
    s["edge_n1"] = edge_flag_json(r.edge_n1);
    s["edge_n2"] = edge_flag_json(r.edge_n2);
    s["edge_n3"] = edge_flag_json(r.edge_n3);
    s["degree"] = degree_flag_json(r.degree);
    s["spectral_rho"] = real_flag_json(r.spectral_rho);
    s["spectral_q"] = real_flag_json(r.spectral_q);
    s["spectral_rho_complement"] = real_flag_json(r.spectral_rho_complement);
    j["sufficient"] = std::move(s);
    j["closure"] = {{"added_edges", r.closure_added_edges},
                    {"exception", r.closure_exception ? ordered_json(family_tag(*r.closure_exception))
                                                      : ordered_json(nullptr)}};
    if (r.verdict) j["verdict"] = connectivity_verdict_json(*r.verdict);
    return j;
}

// The config block names the corpus, not the execution: worker count is
// omitted so reports are byte-identical across thread counts.
inline ordered_json scan_report_json(const ScanReport& r) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["config"] = {{"n", r.config.n},
                   {"k", r.config.k},
                   {"count", r.config.sample_count},
                   {"seed", r.config.seed},
                   {"edge_min", r.config.edge_min},
                   {"edges_free", r.config.edges_free},
                   {"budget", r.config.budget}};
    j["summary"] = {{"confirmed", r.summary.confirmed},
                    {"exceptions", r.summary.exceptions},
                    {"budget_exhausted", r.summary.budget_exhausted},
                    {"anomalies", r.summary.anomalies}};
    ordered_json samples = ordered_json::array();
    for (const auto& rec : r.records) {
        ordered_json s;
        s["index"] = rec.index;
        s["graph6"] = rec.graph6;
        s["outcome"] = to_string(rec.outcome);
        if (rec.exception_tag) s["exception"] = *rec.exception_tag;
        if (rec.failing_set) s["failing_set"] = *rec.failing_set;
        s["expansions"] = rec.expansions;
        s["conditions"] = condition_report_json(rec.report);
        samples.push_back(std::move(s));
    }
    j["samples"] = std::move(samples);
    return j;
}

}  // namespace leafcon
