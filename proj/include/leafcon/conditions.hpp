#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "closure.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "leaf_connectivity.hpp"
#include "spectral.hpp"

namespace leafcon {

// Edge-count sufficiency thresholds, strongest last. n1/n2/n3 take the
// leaf count k; ht is the Hamilton-connected variant taking the minimum
// degree parameter t.
enum class ThresholdKind { n1, n2, n3, ht };

inline const char* to_string(ThresholdKind kind) {
    switch (kind) {
        case ThresholdKind::n1: return "n1";
        case ThresholdKind::n2: return "n2";
        case ThresholdKind::n3: return "n3";
        case ThresholdKind::ht: return "ht";
    }
    return "?";
}

inline constexpr long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

inline bool threshold_applicable(ThresholdKind kind, int n, int kt) {
    switch (kind) {
        case ThresholdKind::n1:
        case ThresholdKind::n2: return kt >= 2 && kt <= n - 4;
        case ThresholdKind::n3: return kt >= 2 && n >= kt + 17;
        case ThresholdKind::ht: return kt >= 2 && n >= 6 * kt + 3;
    }
    return false;
}

inline long long threshold_edges(ThresholdKind kind, int n, int kt) {
    if (!threshold_applicable(kind, n, kt)) {
        std::string req;
        switch (kind) {
            case ThresholdKind::n1:
            case ThresholdKind::n2: req = "2 <= k <= n-4"; break;
            case ThresholdKind::n3: req = "k >= 2 and n >= k+17"; break;
            case ThresholdKind::ht: req = "t >= 2 and n >= 6t+3"; break;
        }
        throw std::invalid_argument(std::string("threshold_edges(") + to_string(kind) +
                                    "): requires " + req);
    }
    switch (kind) {
        case ThresholdKind::n1: return choose2(n - 1) + kt + 1;
        case ThresholdKind::n2: return choose2(n - 2) + 2 * kt + 2;
        case ThresholdKind::n3: return choose2(n - 3) + 3 * kt + 5;
        case ThresholdKind::ht: return choose2(n - kt) + static_cast<long long>(kt) * kt + 2;
    }
    throw std::logic_error("threshold_edges: unreachable");
}

struct DegreeConditionResult {
    bool holds = false;
    // Smallest i with d_{i-k+1} <= i and d_{n-i} <= n-i+k-2 (1-indexed
    // ascending degrees); present iff the condition fails.
    std::optional<int> violating_i;
};

// Degree-sequence sufficiency: if no i in [k, (n+k-2)/2] has both
// d_{i-k+1} <= i and d_{n-i} <= n-i+k-2, the graph is k-leaf-connected.
inline DegreeConditionResult degree_condition(const DegreeProfile& profile, int k) {
    const int n = static_cast<int>(profile.degrees.size());
    if (k < 2 || k > n - 3)
        throw std::invalid_argument("degree_condition: requires 2 <= k <= n-3");
    DegreeConditionResult out;
    out.holds = true;
    for (int i = k; 2 * i <= n + k - 2; ++i) {
        if (profile.degrees[static_cast<size_t>(i - k)] <= i &&
            profile.degrees[static_cast<size_t>(n - i - 1)] <= n - i + k - 2) {
            out.holds = false;
            out.violating_i = i;
            return out;
        }
    }
    return out;
}

struct SpectralThresholds {
    double rho_min = 0.0;             // rho(G) >= rho_min suffices
    double q_min = 0.0;               // q(G) >= q_min suffices
    double rho_complement_max = 0.0;  // rho(complement) <= this suffices
};

inline SpectralThresholds spectral_thresholds(int n, int k) {
    if (k < 2 || n < k + 17)
        throw std::invalid_argument("spectral_thresholds: requires k >= 2 and n >= k+17");
    SpectralThresholds out;
    const double nn = n, kk = k;
    out.rho_min = kk / 2.0 + std::sqrt(nn * nn - (kk + 8.0) * nn + kk * kk / 4.0 + 7.0 * kk + 23.0);
    out.q_min = 2.0 * nn - 8.0 + (6.0 * kk + 16.0) / (nn - 1.0);
    out.rho_complement_max = std::sqrt((nn - kk) * (3.0 * nn - 3.0 * kk - 11.0) / nn);
    return out;
}

struct EdgeFlag {
    bool applicable = false;
    bool holds = false;
    long long value = 0;
    long long threshold = 0;
};

struct RealFlag {
    bool applicable = false;
    bool holds = false;
    double value = 0.0;
    double threshold = 0.0;
};

struct DegreeFlag {
    bool applicable = false;
    bool holds = false;
    std::optional<int> violating_i;
};

// Aggregated audit of every implemented criterion for one (G, k) pair.
// A failing sufficiency flag is never evidence against the property; only
// the exact decider or a recognized exception closure decides negatively.
struct ConditionReport {
    int n = 0;
    int k = 0;
    long long edges = 0;
    int min_degree = 0;
    int connectivity = 0;
    bool min_degree_ok = false;    // delta >= k+1
    bool connectivity_ok = false;  // kappa >= k+1
    EdgeFlag edge_n1, edge_n2, edge_n3;
    DegreeFlag degree;
    RealFlag spectral_rho, spectral_q, spectral_rho_complement;
    std::optional<FamilyId> closure_exception;  // recognizer on the (n+k-1)-closure
    long long closure_added_edges = 0;
    std::optional<ConnectivityVerdict> verdict;  // exact decision, on request
};

inline ConditionReport evaluate_conditions(const Graph& g, int k, bool run_decider = false,
                                           long long budget = kDefaultBudget) {
    const int n = g.n();
    if (k < 2) throw std::invalid_argument("evaluate_conditions: k must be >= 2");
    if (n < k + 1) throw std::invalid_argument("evaluate_conditions: need n >= k+1");
    if (!is_connected(g)) throw std::invalid_argument("evaluate_conditions: graph must be connected");

    ConditionReport r;
    r.n = n;
    r.k = k;
    const DegreeProfile profile = degree_profile(g);
    r.edges = profile.edge_count;
    r.min_degree = profile.min_degree;
    r.min_degree_ok = profile.min_degree >= k + 1;
    r.connectivity = vertex_connectivity(g);
    r.connectivity_ok = r.connectivity >= k + 1;

    auto edge_flag = [&](ThresholdKind kind) {
        EdgeFlag f;
        f.value = r.edges;
        f.applicable = threshold_applicable(kind, n, k);
        if (f.applicable) {
            f.threshold = threshold_edges(kind, n, k);
            f.holds = r.min_degree_ok && f.value >= f.threshold;
        }
        return f;
    };
    r.edge_n1 = edge_flag(ThresholdKind::n1);
    r.edge_n2 = edge_flag(ThresholdKind::n2);
    r.edge_n3 = edge_flag(ThresholdKind::n3);

    r.degree.applicable = k >= 2 && k <= n - 3;
    if (r.degree.applicable) {
        const DegreeConditionResult dc = degree_condition(profile, k);
        r.degree.holds = dc.holds;
        r.degree.violating_i = dc.violating_i;
    }

    if (k >= 2 && n >= k + 17) {
        const SpectralThresholds st = spectral_thresholds(n, k);
        const SpectralReport sp = spectral_report(g);
        r.spectral_rho = {true, r.min_degree_ok && sp.rho >= st.rho_min, sp.rho, st.rho_min};
        r.spectral_q = {true, r.min_degree_ok && sp.q >= st.q_min, sp.q, st.q_min};
        r.spectral_rho_complement = {true,
                                     r.min_degree_ok && sp.rho_complement <= st.rho_complement_max,
                                     sp.rho_complement, st.rho_complement_max};
    }

    if (k <= n - 1) {
        const ClosureResult cr = nk_closure(g, k);
        r.closure_added_edges = static_cast<long long>(cr.added_edges.size());
        r.closure_exception = recognize_exception(cr.closed_graph, k);
    }

    if (run_decider) r.verdict = is_k_leaf_connected(g, k, budget);
    return r;
}

}  // namespace leafcon
