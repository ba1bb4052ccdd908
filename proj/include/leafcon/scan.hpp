#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "conditions.hpp"
#include "graph6.hpp"

namespace leafcon {

struct ScanConfig {
    int n = 0;
    int k = 2;
    int sample_count = 1;
    uint64_t seed = 0;
    long long edge_min = -1;  // -1: the strongest edge threshold for (n, k)
    bool edges_free = false;  // sample size uniformly in [edge_min, C(n,2)]
    long long budget = kDefaultBudget;
    int parallelism = 1;
};

enum class ScanOutcome { confirmed, exception, budget_exhausted, anomaly };

inline const char* to_string(ScanOutcome o) {
    switch (o) {
        case ScanOutcome::confirmed: return "confirmed";
        case ScanOutcome::exception: return "exception";
        case ScanOutcome::budget_exhausted: return "budget-exhausted";
        case ScanOutcome::anomaly: return "anomaly";
    }
    return "?";
}

struct ScanRecord {
    int index = 0;
    std::string graph6;
    ConditionReport report;
    ScanOutcome outcome = ScanOutcome::anomaly;
    std::optional<std::string> exception_tag;
    std::optional<std::vector<int>> failing_set;  // populated for anomalies
    long long expansions = 0;
};

struct ScanSummary {
    int confirmed = 0;
    int exceptions = 0;
    int budget_exhausted = 0;
    int anomalies = 0;
};

struct ScanReport {
    ScanConfig config;          // with edge_min resolved
    std::vector<ScanRecord> records;
    ScanSummary summary;
};

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Unbiased uniform draw from [0, bound) by rejection.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    const uint64_t rem = (std::numeric_limits<uint64_t>::max() % bound + 1) % bound;
    uint64_t x = rng();
    while (rem != 0 && x >= std::numeric_limits<uint64_t>::max() - rem + 1) x = rng();
    return x % bound;
}

// Uniform m-edge graph conditioned on connectivity and minimum degree
// >= k+1, by rejection. The sample depends only on (config, index), which
// keeps reports identical across worker counts.
inline Graph sample_scan_graph(const ScanConfig& cfg, long long edge_min, int index) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
    const long long max_edges = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2;
    std::vector<Edge> pool;
    pool.reserve(static_cast<size_t>(max_edges));
    for (int u = 0; u < cfg.n; ++u)
        for (int v = u + 1; v < cfg.n; ++v) pool.emplace_back(u, v);

    constexpr int kMaxAttempts = 10000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const long long m =
            cfg.edges_free
                ? edge_min + static_cast<long long>(uniform_below(
                                 rng, static_cast<uint64_t>(max_edges - edge_min + 1)))
                : edge_min;
        for (long long i = 0; i < m; ++i) {
            const long long j =
                i + static_cast<long long>(uniform_below(rng, static_cast<uint64_t>(max_edges - i)));
            std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
        }
        GraphBuilder b(cfg.n);
        for (long long i = 0; i < m; ++i)
            b.add_edge(pool[static_cast<size_t>(i)].first, pool[static_cast<size_t>(i)].second);
        Graph g = b.take();
        bool degree_ok = true;
        for (int v = 0; v < cfg.n && degree_ok; ++v)
            if (g.degree(v) < cfg.k + 1) degree_ok = false;
        if (degree_ok && is_connected(g)) return g;
    }
    throw std::runtime_error("run_scan: rejection sampling failed for sample " +
                             std::to_string(index) + "; config likely infeasible");
}

inline ScanRecord scan_one(const ScanConfig& cfg, long long edge_min, int index) {
    ScanRecord rec;
    rec.index = index;
    const Graph g = sample_scan_graph(cfg, edge_min, index);
    rec.graph6 = graph6_encode(g);
    rec.report = evaluate_conditions(g, cfg.k, false);
    if (rec.report.closure_exception) {
        rec.outcome = ScanOutcome::exception;
        rec.exception_tag = family_tag(*rec.report.closure_exception);
        return rec;
    }
    const ConnectivityVerdict v = is_k_leaf_connected(g, cfg.k, cfg.budget);
    rec.expansions = v.expansions;
    switch (v.decision) {
        case Decision::yes: rec.outcome = ScanOutcome::confirmed; break;
        case Decision::budget_exhausted: rec.outcome = ScanOutcome::budget_exhausted; break;
        case Decision::no:
            rec.outcome = ScanOutcome::anomaly;
            rec.failing_set = v.failing_set;
            break;
    }
    return rec;
}

}  // namespace detail

inline ScanReport run_scan(const ScanConfig& config) {
    ScanConfig cfg = config;
    if (cfg.k < 2) throw std::invalid_argument("run_scan: k must be >= 2");
    if (cfg.n < cfg.k + 1) throw std::invalid_argument("run_scan: need n >= k+1");
    if (cfg.sample_count < 1) throw std::invalid_argument("run_scan: sample_count must be >= 1");
    if (cfg.budget < 1) throw std::invalid_argument("run_scan: budget must be >= 1");
    if (cfg.parallelism < 1) throw std::invalid_argument("run_scan: parallelism must be >= 1");
    const long long max_edges = static_cast<long long>(cfg.n) * (cfg.n - 1) / 2;
    if (cfg.edge_min < 0) {
        if (!threshold_applicable(ThresholdKind::n3, cfg.n, cfg.k))
            throw std::invalid_argument(
                "run_scan: default edge_min needs n >= k+17; pass edge_min explicitly");
        cfg.edge_min = threshold_edges(ThresholdKind::n3, cfg.n, cfg.k);
    }
    if (cfg.edge_min > max_edges)
        throw std::invalid_argument("run_scan: edge_min exceeds the " + std::to_string(max_edges) +
                                    " possible edges");
    if (cfg.edge_min < cfg.n - 1)
        throw std::invalid_argument("run_scan: edge_min below n-1 cannot yield connected samples");

    ScanReport report;
    report.config = cfg;
    report.records.resize(static_cast<size_t>(cfg.sample_count));

    std::atomic<int> next{0};
    std::mutex fail_mutex;
    std::exception_ptr failure;
    auto worker = [&] {
        while (true) {
            const int i = next.fetch_add(1);
            if (i >= cfg.sample_count) return;
            try {
                report.records[static_cast<size_t>(i)] = detail::scan_one(cfg, cfg.edge_min, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    if (cfg.parallelism == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        const int workers = std::min(cfg.parallelism, cfg.sample_count);
        threads.reserve(static_cast<size_t>(workers));
        for (int i = 0; i < workers; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const auto& rec : report.records) {
        switch (rec.outcome) {
            case ScanOutcome::confirmed: ++report.summary.confirmed; break;
            case ScanOutcome::exception: ++report.summary.exceptions; break;
            case ScanOutcome::budget_exhausted: ++report.summary.budget_exhausted; break;
            case ScanOutcome::anomaly: ++report.summary.anomalies; break;
        }
    }
    return report;
}

}  // namespace leafcon
