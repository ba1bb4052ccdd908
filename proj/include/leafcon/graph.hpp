#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"

namespace leafcon {

// Thrown when an input exceeds a documented implementation bound
// (e.g. exact clique search past its vertex limit).
struct capability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

// Simple undirected graph, immutable after construction. Adjacency is kept
// as one VertexSet row per vertex.
class Graph {
public:
    Graph() = default;

    int n() const { return n_; }

    bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
    int degree(int v) const { return adj_[static_cast<size_t>(v)].count(); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& row : adj_) twice += row.count();
        return twice / 2;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[static_cast<size_t>(u)].next(u); v >= 0;
                 v = adj_[static_cast<size_t>(u)].next(v))
                out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph&) const = default;

    static Graph build(int n, const std::vector<Edge>& edges);
    static Graph empty(int n);
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    // Parts {0..a-1} and {a..a+b-1}, all cross edges.
    static Graph complete_bipartite(int a, int b);

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// The one place adjacency gets mutated; everything else works on finished
// Graph values.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n), adj_(static_cast<size_t>(n), VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("GraphBuilder: negative vertex count");
    }
    explicit GraphBuilder(const Graph& g) : n_(g.n()) {
        adj_.reserve(static_cast<size_t>(n_));
        for (int v = 0; v < n_; ++v) adj_.push_back(g.neighbors(v));
    }

    int n() const { return n_; }
    bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }

    void add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") invalid for a graph on " + std::to_string(n_) +
                                        " vertices");
        adj_[static_cast<size_t>(u)].set(v);
        adj_[static_cast<size_t>(v)].set(u);
    }

    Graph take() {
        Graph g;
        g.n_ = n_;
        g.adj_ = std::move(adj_);
        return g;
    }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph Graph::build(int n, const std::vector<Edge>& edges) {
    GraphBuilder b(n);
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.take();
}

inline Graph Graph::empty(int n) { return GraphBuilder(n).take(); }

inline Graph Graph::complete(int n) {
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.take();
}

inline Graph Graph::path(int n) {
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.take();
}

inline Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.take();
}

inline Graph Graph::complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw std::invalid_argument("complete_bipartite: negative part");
    GraphBuilder g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g.take();
}

inline Graph complement(const Graph& g) {
    const int n = g.n();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) b.add_edge(u, v);
    return b.take();
}

// g1 keeps its labels, g2 is shifted by g1.n(); every cross pair is joined.
inline Graph join(const Graph& g1, const Graph& g2) {
    const int n1 = g1.n(), n2 = g2.n();
    GraphBuilder b(n1 + n2);
    for (const auto& [u, v] : g1.edges()) b.add_edge(u, v);
    for (const auto& [u, v] : g2.edges()) b.add_edge(u + n1, v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
    return b.take();
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.n();
    GraphBuilder b(n1 + g2.n());
    for (const auto& [u, v] : g1.edges()) b.add_edge(u, v);
    for (const auto& [u, v] : g2.edges()) b.add_edge(u + n1, v + n1);
    return b.take();
}

struct DegreeProfile {
    std::vector<int> degrees;  // ascending
    int min_degree = 0;
    long long edge_count = 0;
};

inline DegreeProfile degree_profile(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("degree_profile: empty graph");
    DegreeProfile p;
    p.degrees.reserve(static_cast<size_t>(g.n()));
    long long twice = 0;
    for (int v = 0; v < g.n(); ++v) {
        p.degrees.push_back(g.degree(v));
        twice += p.degrees.back();
    }
    std::sort(p.degrees.begin(), p.degrees.end());
    p.min_degree = p.degrees.front();
    p.edge_count = twice / 2;
    return p;
}

// Flood fill from `start` over the full vertex set.
inline VertexSet reachable_set(const Graph& g, int start) {
    VertexSet seen(g.n());
    VertexSet frontier(g.n());
    frontier.set(start);
    while (!frontier.empty()) {
        seen |= frontier;
        VertexSet next(g.n());
        for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= g.neighbors(v);
        next.subtract(seen);
        frontier = next;
    }
    return seen;
}

inline bool is_connected(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("is_connected: empty graph");
    return reachable_set(g, 0).count() == g.n();
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet left = VertexSet::full(g.n());
    for (int v = left.first(); v >= 0; v = left.first()) {
        VertexSet comp = reachable_set(g, v);
        left.subtract(comp);
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Subgraph induced by `vertices`; new labels follow the given order.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    const int m = static_cast<int>(vertices.size());
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i) {
        const int u = vertices[static_cast<size_t>(i)];
        if (u < 0 || u >= g.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        for (int j = i + 1; j < m; ++j)
            if (g.has_edge(u, vertices[static_cast<size_t>(j)])) b.add_edge(i, j);
    }
    return b.take();
}

namespace detail {

// Dinic max-flow, small and integer-capacity; enough for vertex cuts at
// desk scale.
class Dinic {
public:
    explicit Dinic(int nodes) : head_(static_cast<size_t>(nodes), -1), level_(nodes), it_(nodes) {}

    void add_edge(int u, int v, int cap) {
        es_.push_back({v, head_[static_cast<size_t>(u)], cap});
        head_[static_cast<size_t>(u)] = static_cast<int>(es_.size()) - 1;
        es_.push_back({u, head_[static_cast<size_t>(v)], 0});
        head_[static_cast<size_t>(v)] = static_cast<int>(es_.size()) - 1;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (int f = dfs(s, t, 1 << 30)) flow += f;
        }
        return flow;
    }

    // After max_flow: nodes reachable from s in the residual network.
    std::vector<char> residual_reachable(int s) const {
        std::vector<char> seen(head_.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[static_cast<size_t>(u)]; e >= 0; e = es_[static_cast<size_t>(e)].next)
                if (es_[static_cast<size_t>(e)].cap > 0 && !seen[static_cast<size_t>(es_[static_cast<size_t>(e)].to)]) {
                    seen[static_cast<size_t>(es_[static_cast<size_t>(e)].to)] = 1;
                    q.push(es_[static_cast<size_t>(e)].to);
                }
        }
        return seen;
    }

private:
    struct E {
        int to, next, cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        q.push(s);
        level_[static_cast<size_t>(s)] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[static_cast<size_t>(u)]; e >= 0; e = es_[static_cast<size_t>(e)].next) {
                const auto& ed = es_[static_cast<size_t>(e)];
                if (ed.cap > 0 && level_[static_cast<size_t>(ed.to)] < 0) {
                    level_[static_cast<size_t>(ed.to)] = level_[static_cast<size_t>(u)] + 1;
                    q.push(ed.to);
                }
            }
        }
        return level_[static_cast<size_t>(t)] >= 0;
    }

    int dfs(int u, int t, int limit) {
        if (u == t) return limit;
        for (int& e = it_[static_cast<size_t>(u)]; e >= 0; e = es_[static_cast<size_t>(e)].next) {
            auto& ed = es_[static_cast<size_t>(e)];
            if (ed.cap > 0 && level_[static_cast<size_t>(ed.to)] == level_[static_cast<size_t>(u)] + 1) {
                int f = dfs(ed.to, t, std::min(limit, ed.cap));
                if (f > 0) {
                    ed.cap -= f;
                    es_[static_cast<size_t>(e ^ 1)].cap += f;
                    return f;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> it_;
    std::vector<E> es_;
};

// Local vertex connectivity between non-adjacent s,t via the split network:
// in(x)=2x, out(x)=2x+1, unit cap on internal arcs of every x != s,t.
inline Dinic make_split_network(const Graph& g, int s, int t) {
    const int n = g.n();
    Dinic d(2 * n);
    for (int x = 0; x < n; ++x)
        if (x != s && x != t) d.add_edge(2 * x, 2 * x + 1, 1);
    for (const auto& [a, b] : g.edges()) {
        d.add_edge(2 * a + 1, 2 * b, n);
        d.add_edge(2 * b + 1, 2 * a, n);
    }
    return d;
}

}  // namespace detail

// Minimum over non-adjacent pairs of local connectivity; complete graphs by
// convention give n-1.
inline int vertex_connectivity(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: need at least 2 vertices");
    if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2) return n - 1;
    int best = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) {
                detail::Dinic d = detail::make_split_network(g, u, v);
                best = std::min(best, d.max_flow(2 * u + 1, 2 * v));
                if (best == 0) return 0;
            }
    return best;
}

// Connectivity plus a witnessing minimum vertex cut (empty for complete
// graphs, where no cut exists).
inline std::pair<int, std::vector<int>> vertex_connectivity_with_cut(const Graph& g) {
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("vertex_connectivity: need at least 2 vertices");
    if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2) return {n - 1, {}};
    int best = n, bs = -1, bt = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) {
                detail::Dinic d = detail::make_split_network(g, u, v);
                int f = d.max_flow(2 * u + 1, 2 * v);
                if (f < best) {
                    best = f;
                    bs = u;
                    bt = v;
                }
            }
    detail::Dinic d = detail::make_split_network(g, bs, bt);
    d.max_flow(2 * bs + 1, 2 * bt);
    auto reach = d.residual_reachable(2 * bs + 1);
    std::vector<int> cut;
    for (int x = 0; x < n; ++x)
        if (x != bs && x != bt && reach[static_cast<size_t>(2 * x)] && !reach[static_cast<size_t>(2 * x + 1)])
            cut.push_back(x);
    return {best, cut};
}

inline constexpr int kCliqueVertexLimit = 128;

namespace detail {

// Branch and bound with a greedy-coloring bound (color classes are
// independent sets, so a clique inside P takes at most one vertex per class).
struct MaxCliqueSolver {
    const Graph& g;
    int best = 0;

    void expand(VertexSet p, int depth) {
        std::vector<std::pair<int, int>> order;  // (vertex, color)
        order.reserve(static_cast<size_t>(p.count()));
        VertexSet uncolored = p;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            VertexSet avail = uncolored;
            for (int v = avail.first(); v >= 0; v = avail.first()) {
                order.emplace_back(v, color);
                uncolored.reset(v);
                avail.reset(v);
                avail.subtract(g.neighbors(v));
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto [v, c] = *it;
            if (depth + c <= best) return;
            VertexSet p2 = p & g.neighbors(v);
            if (p2.empty())
                best = std::max(best, depth + 1);
            else
                expand(std::move(p2), depth + 1);
            p.reset(v);
        }
    }
};

}  // namespace detail

inline int clique_number(const Graph& g) {
    if (g.n() == 0) return 0;
    if (g.n() > kCliqueVertexLimit)
        throw capability_error("clique_number: exact search is limited to " +
                               std::to_string(kCliqueVertexLimit) + " vertices, got " +
                               std::to_string(g.n()));
    detail::MaxCliqueSolver solver{g};
    solver.expand(VertexSet::full(g.n()), 0);
    return solver.best;
}

}  // namespace leafcon
