#pragma once

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace leafcon {

struct ClosureResult {
    Graph closed_graph;
    std::vector<Edge> added_edges;  // in application order
    int l = 0;
};

// Joins non-adjacent pairs with degree sum >= l until none remain. The
// worklist re-enqueues pairs touching an endpoint whose degree just grew, so
// the fixed point is reached regardless of the seed order.
inline ClosureResult l_closure(const Graph& g, int l, const std::vector<Edge>& candidate_order) {
    if (l < 0) throw std::invalid_argument("l_closure: negative threshold");
    const int n = g.n();
    GraphBuilder b(g);
    std::vector<int> deg(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);

    std::deque<Edge> work;
    for (const auto& [u, v] : candidate_order) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("l_closure: candidate pair out of range");
        work.emplace_back(u, v);
    }
    // The seed must mention every non-adjacent pair or the fixed point is
    // not guaranteed.
    {
        VertexSet seeded(n * n == 0 ? 0 : n * n);
        for (const auto& [u, v] : candidate_order) {
            seeded.set(u * n + v);
            seeded.set(v * n + u);
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v) && !seeded.test(u * n + v))
                    throw std::invalid_argument("l_closure: candidate order misses pair (" +
                                                std::to_string(u) + "," + std::to_string(v) + ")");
    }

    std::vector<Edge> added;
    while (!work.empty()) {
        const auto [u, v] = work.front();
        work.pop_front();
        if (b.has_edge(u, v)) continue;
        if (deg[static_cast<size_t>(u)] + deg[static_cast<size_t>(v)] < l) continue;
        b.add_edge(u, v);
        ++deg[static_cast<size_t>(u)];
        ++deg[static_cast<size_t>(v)];
        added.emplace_back(std::min(u, v), std::max(u, v));
        for (int w = 0; w < n; ++w) {
            if (w != u && !b.has_edge(u, w)) work.emplace_back(u, w);
            if (w != v && !b.has_edge(v, w)) work.emplace_back(v, w);
        }
    }
    return {b.take(), std::move(added), l};
}

inline ClosureResult l_closure(const Graph& g, int l) {
    std::vector<Edge> order;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) order.emplace_back(u, v);
    return l_closure(g, l, order);
}

// Closure at threshold n+k-1, the one that preserves existence of spanning
// trees with a prescribed k-leaf set.
inline ClosureResult nk_closure(const Graph& g, int k) {
    const int n = g.n();
    if (k < 2 || k > n - 1)
        throw std::invalid_argument("nk_closure: k must satisfy 2 <= k <= n-1, got k=" +
                                    std::to_string(k) + ", n=" + std::to_string(n));
    return l_closure(g, n + k - 1);
}

}  // namespace leafcon
