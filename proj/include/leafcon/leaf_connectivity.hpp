#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace leafcon {

inline constexpr long long kDefaultBudget = 10'000'000;
inline constexpr int kOracleVertexLimit = 9;

enum class Decision { yes, no, budget_exhausted };

enum class RefutationTag {
    no_internal_spanning_tree,
    s_vertex_isolated_from_internals,
    matching_infeasible_exhausted,
    star_center_missing,
};

inline const char* to_string(Decision d) {
    switch (d) {
        case Decision::yes: return "yes";
        case Decision::no: return "no";
        case Decision::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

inline const char* to_string(RefutationTag t) {
    switch (t) {
        case RefutationTag::no_internal_spanning_tree: return "no-internal-spanning-tree";
        case RefutationTag::s_vertex_isolated_from_internals: return "s-vertex-isolated-from-internals";
        case RefutationTag::matching_infeasible_exhausted: return "matching-infeasible-exhausted";
        case RefutationTag::star_center_missing: return "star-center-missing";
    }
    return "?";
}

struct LeafVerdict {
    Decision decision = Decision::no;
    // parent[v] of a spanning tree whose degree-1 set is exactly S; the root
    // stores -1. Present exactly for yes verdicts, machine-checked.
    std::optional<std::vector<int>> witness_parent;
    std::optional<RefutationTag> refutation;
    long long expansions = 0;  // search nodes spent on this set
    bool searched = false;     // true when tree enumeration ran
};

namespace detail {

// Checks a parent map encodes a spanning tree of g with degree-1 set exactly
// S. Used to vet every yes witness before it leaves the module.
inline bool witness_valid(const Graph& g, const std::vector<int>& s_sorted,
                          const std::vector<int>& parent) {
    const int n = g.n();
    if (static_cast<int>(parent.size()) != n) return false;
    int root = -1;
    for (int v = 0; v < n; ++v) {
        if (parent[static_cast<size_t>(v)] == -1) {
            if (root >= 0) return false;
            root = v;
        } else if (parent[static_cast<size_t>(v)] < 0 || parent[static_cast<size_t>(v)] >= n ||
                   !g.has_edge(v, parent[static_cast<size_t>(v)])) {
            return false;
        }
    }
    if (root < 0) return false;
    // Every vertex must reach the root without revisiting (acyclic + connected).
    std::vector<int> deg(static_cast<size_t>(n), 0);
    std::vector<char> done(static_cast<size_t>(n), 0);
    done[static_cast<size_t>(root)] = 1;
    for (int v = 0; v < n; ++v) {
        std::vector<int> chain;
        int x = v;
        while (!done[static_cast<size_t>(x)]) {
            chain.push_back(x);
            if (static_cast<int>(chain.size()) > n) return false;
            x = parent[static_cast<size_t>(x)];
        }
        for (int c : chain) done[static_cast<size_t>(c)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (v != root) {
            ++deg[static_cast<size_t>(v)];
            ++deg[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        }
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.push_back(v);
    return leaves == s_sorted;
}

// Backtracking enumeration of spanning trees of H = G[I], testing each
// candidate's leaves for a matching into S. Edges are decided in/out in a
// fixed order; an exclusion is allowed only while the remaining graph stays
// connected (bridge pruning). Two further admissible prunes cut branches
// whose every completion must fail the leaf matching: a leaf-count lower
// bound 2 + sum(max(deg-2,0)) > |S|, and unmatchable forced leaves (vertices
// whose incident edges are all decided and whose tree degree ended at 1).
class LeafTreeSearch {
public:
    LeafTreeSearch(const Graph& g, const Graph& h, const std::vector<int>& internal,
                   const std::vector<int>& s, long long budget)
        : g_(g), h_(h), ivert_(internal), s_(s), hn_(h.n()),
          k_(static_cast<int>(s.size())), budget_(budget), seen_(hn_), frontier_(hn_) {
        for (int u = 0; u < hn_; ++u)
            for (int v = h_.neighbors(u).next(u); v >= 0; v = h_.neighbors(u).next(v))
                edges_.emplace_back(u, v);
        m_ = static_cast<int>(edges_.size());
        avail_.reserve(static_cast<size_t>(hn_));
        for (int v = 0; v < hn_; ++v) avail_.push_back(h_.neighbors(v));
        chosen_deg_.assign(static_cast<size_t>(hn_), 0);
        undecided_.assign(static_cast<size_t>(hn_), 0);
        for (int v = 0; v < hn_; ++v) undecided_[static_cast<size_t>(v)] = h_.degree(v);
        dsu_parent_.resize(static_cast<size_t>(hn_));
        std::iota(dsu_parent_.begin(), dsu_parent_.end(), 0);
        dsu_size_.assign(static_cast<size_t>(hn_), 1);
        forced_.assign(static_cast<size_t>(hn_), 0);
        s_adj_.assign(static_cast<size_t>(hn_), {});
        for (int v = 0; v < hn_; ++v)
            for (int j = 0; j < k_; ++j)
                if (g_.has_edge(ivert_[static_cast<size_t>(v)], s_[static_cast<size_t>(j)]))
                    s_adj_[static_cast<size_t>(v)].push_back(j);
    }

    bool run() { return search(0); }

    bool out_of_budget() const { return out_of_budget_; }
    long long expansions() const { return expansions_; }

    // Witness in G labels; valid only after run() returned true.
    std::vector<int> build_parent() const {
        std::vector<std::vector<int>> tree(static_cast<size_t>(hn_));
        for (int e : chosen_stack_) {
            tree[static_cast<size_t>(edges_[static_cast<size_t>(e)].first)]
                .push_back(edges_[static_cast<size_t>(e)].second);
            tree[static_cast<size_t>(edges_[static_cast<size_t>(e)].second)]
                .push_back(edges_[static_cast<size_t>(e)].first);
        }
        std::vector<int> parent_h(static_cast<size_t>(hn_), -2);
        std::vector<int> stack{0};
        parent_h[0] = -1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : tree[static_cast<size_t>(v)])
                if (parent_h[static_cast<size_t>(w)] == -2) {
                    parent_h[static_cast<size_t>(w)] = v;
                    stack.push_back(w);
                }
        }
        std::vector<int> parent(static_cast<size_t>(g_.n()), -1);
        for (int v = 1; v < hn_; ++v)
            parent[static_cast<size_t>(ivert_[static_cast<size_t>(v)])] =
                ivert_[static_cast<size_t>(parent_h[static_cast<size_t>(v)])];
        for (int j = 0; j < k_; ++j) {
            int anchor_h = match_right_[static_cast<size_t>(j)];
            if (anchor_h < 0) {
                // Any internal neighbor keeps s a pendant; existence was
                // checked up front.
                const VertexSet& nb = g_.neighbors(s_[static_cast<size_t>(j)]);
                for (int v = 0; v < hn_; ++v)
                    if (nb.test(ivert_[static_cast<size_t>(v)])) {
                        anchor_h = v;
                        break;
                    }
            }
            parent[static_cast<size_t>(s_[static_cast<size_t>(j)])] =
                ivert_[static_cast<size_t>(anchor_h)];
        }
        return parent;
    }

private:
    int find(int x) const {
        while (dsu_parent_[static_cast<size_t>(x)] != x) x = dsu_parent_[static_cast<size_t>(x)];
        return x;
    }

    // Kuhn augmenting path over S slots; left side given implicitly by
    // s_adj_ of the tried vertex.
    bool augment(int hv, std::vector<char>& vis) {
        for (int j : s_adj_[static_cast<size_t>(hv)]) {
            if (vis[static_cast<size_t>(j)]) continue;
            vis[static_cast<size_t>(j)] = 1;
            if (match_right_[static_cast<size_t>(j)] < 0 ||
                augment(match_right_[static_cast<size_t>(j)], vis)) {
                match_right_[static_cast<size_t>(j)] = hv;
                return true;
            }
        }
        return false;
    }

    bool saturates(const std::vector<int>& left) {
        match_right_.assign(static_cast<size_t>(k_), -1);
        std::vector<char> vis(static_cast<size_t>(k_));
        for (int hv : left) {
            std::fill(vis.begin(), vis.end(), 0);
            if (!augment(hv, vis)) return false;
        }
        return true;
    }

    // Bookkeeping after edge decision touching v. Returns false when the
    // branch is dead (fixed isolated vertex, or forced leaves unmatchable).
    bool note_decided(int v) {
        if (undecided_[static_cast<size_t>(v)] != 0) return true;
        if (chosen_deg_[static_cast<size_t>(v)] == 0) return false;
        if (chosen_deg_[static_cast<size_t>(v)] == 1 && !forced_[static_cast<size_t>(v)]) {
            forced_[static_cast<size_t>(v)] = 1;
            forced_list_.push_back(v);
            if (static_cast<int>(forced_list_.size()) > k_) return false;
            if (!saturates(forced_list_)) return false;
        }
        return true;
    }

    void unwind_forced(size_t mark) {
        while (forced_list_.size() > mark) {
            forced_[static_cast<size_t>(forced_list_.back())] = 0;
            forced_list_.pop_back();
        }
    }

    bool remaining_connected() {
        // Flood fill over the not-yet-excluded edges.
        for (int i = 0; i < hn_; ++i) {
            seen_.reset(i);
            frontier_.reset(i);
        }
        frontier_.set(0);
        int cnt = 0;
        while (!frontier_.empty()) {
            seen_ |= frontier_;
            VertexSet next(hn_);
            for (int v = frontier_.first(); v >= 0; v = frontier_.next(v)) {
                ++cnt;
                next |= avail_[static_cast<size_t>(v)];
            }
            next.subtract(seen_);
            frontier_ = next;
        }
        return cnt == hn_;
    }

    bool try_candidate() {
        leaves_.clear();
        for (int v = 0; v < hn_; ++v)
            if (chosen_deg_[static_cast<size_t>(v)] == 1) leaves_.push_back(v);
        if (static_cast<int>(leaves_.size()) > k_) return false;
        return saturates(leaves_);
    }

    bool search(int idx) {
        if (out_of_budget_) return false;
        if (++expansions_ > budget_) {
            out_of_budget_ = true;
            return false;
        }
        if (chosen_count_ == hn_ - 1) return try_candidate();
        if (idx == m_) return false;
        const auto [a, b] = edges_[static_cast<size_t>(idx)];

        // Branch 1: edge goes into the tree.
        const int ra = find(a), rb = find(b);
        if (ra != rb) {
            const int grow = (chosen_deg_[static_cast<size_t>(a)] >= 2 ? 1 : 0) +
                             (chosen_deg_[static_cast<size_t>(b)] >= 2 ? 1 : 0);
            if (2 + extra_leaves_ + grow <= k_) {
                int small = ra, big = rb;
                if (dsu_size_[static_cast<size_t>(small)] > dsu_size_[static_cast<size_t>(big)])
                    std::swap(small, big);
                dsu_parent_[static_cast<size_t>(small)] = big;
                dsu_size_[static_cast<size_t>(big)] += dsu_size_[static_cast<size_t>(small)];
                ++chosen_deg_[static_cast<size_t>(a)];
                ++chosen_deg_[static_cast<size_t>(b)];
                extra_leaves_ += grow;
                --undecided_[static_cast<size_t>(a)];
                --undecided_[static_cast<size_t>(b)];
                ++chosen_count_;
                chosen_stack_.push_back(idx);
                const size_t fmark = forced_list_.size();

                if (note_decided(a) && note_decided(b) && search(idx + 1)) return true;

                unwind_forced(fmark);
                chosen_stack_.pop_back();
                --chosen_count_;
                ++undecided_[static_cast<size_t>(a)];
                ++undecided_[static_cast<size_t>(b)];
                extra_leaves_ -= grow;
                --chosen_deg_[static_cast<size_t>(a)];
                --chosen_deg_[static_cast<size_t>(b)];
                dsu_size_[static_cast<size_t>(big)] -= dsu_size_[static_cast<size_t>(small)];
                dsu_parent_[static_cast<size_t>(small)] = small;
                if (out_of_budget_) return false;
            }
        }

        // Branch 2: edge stays out; the rest must still connect I.
        avail_[static_cast<size_t>(a)].reset(b);
        avail_[static_cast<size_t>(b)].reset(a);
        --undecided_[static_cast<size_t>(a)];
        --undecided_[static_cast<size_t>(b)];
        const size_t fmark = forced_list_.size();

        if (note_decided(a) && note_decided(b) && remaining_connected() && search(idx + 1))
            return true;

        unwind_forced(fmark);
        ++undecided_[static_cast<size_t>(a)];
        ++undecided_[static_cast<size_t>(b)];
        avail_[static_cast<size_t>(a)].set(b);
        avail_[static_cast<size_t>(b)].set(a);
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    const std::vector<int>& ivert_;
    const std::vector<int>& s_;
    const int hn_;
    const int k_;
    const long long budget_;

    std::vector<std::pair<int, int>> edges_;
    int m_ = 0;
    std::vector<VertexSet> avail_;
    std::vector<int> chosen_deg_;
    std::vector<int> undecided_;
    std::vector<int> dsu_parent_;
    std::vector<int> dsu_size_;
    std::vector<int> chosen_stack_;
    std::vector<char> forced_;
    std::vector<int> forced_list_;
    std::vector<std::vector<int>> s_adj_;
    std::vector<int> match_right_;
    std::vector<int> leaves_;
    int chosen_count_ = 0;
    int extra_leaves_ = 0;
    long long expansions_ = 0;
    bool out_of_budget_ = false;
    VertexSet seen_;
    VertexSet frontier_;
};

}  // namespace detail

// Decides whether g has a spanning tree whose leaf set is exactly S.
// Decomposition: the internal vertices I = V \ S must induce a connected
// subgraph carrying a spanning tree T', every vertex of S must hang off I,
// and the leaves of T' must be coverable by distinct members of S adjacent
// in g (otherwise some internal vertex would end with tree degree 1).
inline LeafVerdict spanning_tree_with_leaf_set(const Graph& g, std::vector<int> s,
                                               long long budget = kDefaultBudget) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("spanning_tree_with_leaf_set: empty graph");
    if (!is_connected(g))
        throw std::invalid_argument("spanning_tree_with_leaf_set: graph must be connected");
    if (budget < 1) throw std::invalid_argument("spanning_tree_with_leaf_set: budget must be positive");
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw std::invalid_argument("spanning_tree_with_leaf_set: vertex out of range");
        if (i > 0 && s[i] == s[i - 1])
            throw std::invalid_argument("spanning_tree_with_leaf_set: duplicate vertex in S");
    }
    const int k = static_cast<int>(s.size());
    if (k < 2 || k > n - 1)
        throw std::invalid_argument("spanning_tree_with_leaf_set: |S| must satisfy 2 <= |S| <= n-1");

    VertexSet in_s(n);
    for (int v : s) in_s.set(v);
    std::vector<int> internal;
    for (int v = 0; v < n; ++v)
        if (!in_s.test(v)) internal.push_back(v);

    LeafVerdict out;
    if (internal.size() == 1) {
        const int center = internal[0];
        if (in_s.subset_of(g.neighbors(center))) {
            std::vector<int> parent(static_cast<size_t>(n), center);
            parent[static_cast<size_t>(center)] = -1;
            if (!detail::witness_valid(g, s, parent))
                throw std::logic_error("spanning_tree_with_leaf_set: invalid star witness");
            out.decision = Decision::yes;
            out.witness_parent = std::move(parent);
        } else {
            out.decision = Decision::no;
            out.refutation = RefutationTag::star_center_missing;
        }
        return out;
    }

    Graph h = induced_subgraph(g, internal);
    if (!is_connected(h)) {
        out.decision = Decision::no;
        out.refutation = RefutationTag::no_internal_spanning_tree;
        return out;
    }
    VertexSet internal_mask(n);
    for (int u : internal) internal_mask.set(u);
    for (int v : s)
        if (!g.neighbors(v).intersects(internal_mask)) {
            out.decision = Decision::no;
            out.refutation = RefutationTag::s_vertex_isolated_from_internals;
            return out;
        }

    detail::LeafTreeSearch search(g, h, internal, s, budget);
    out.searched = true;
    const bool found = search.run();
    out.expansions = search.expansions();
    if (found) {
        std::vector<int> parent = search.build_parent();
        if (!detail::witness_valid(g, s, parent))
            throw std::logic_error("spanning_tree_with_leaf_set: invalid search witness");
        out.decision = Decision::yes;
        out.witness_parent = std::move(parent);
    } else if (search.out_of_budget()) {
        out.decision = Decision::budget_exhausted;
    } else {
        out.decision = Decision::no;
        out.refutation = RefutationTag::matching_infeasible_exhausted;
    }
    return out;
}

struct PerSetStats {
    long long fast = 0;      // decided without tree enumeration
    long long searched = 0;  // needed the backtracking search
};

struct ConnectivityVerdict {
    Decision decision = Decision::no;
    std::optional<std::vector<int>> failing_set;  // sorted; present iff decision == no
    PerSetStats stats;
    std::optional<int> connectivity;       // kappa when the quick reject was evaluated
    bool rejected_by_connectivity = false;
    long long expansions = 0;

    bool holds() const { return decision == Decision::yes; }
};

// Sweeps all k-subsets in colex order. For k <= n-2 a vertex cut of size
// <= k refutes immediately: padding the cut to k vertices while keeping two
// components alive leaves V \ S disconnected, so no spanning tree has leaf
// set S.
inline ConnectivityVerdict is_k_leaf_connected(const Graph& g, int k,
                                               long long budget = kDefaultBudget) {
    const int n = g.n();
    if (k < 2) throw std::invalid_argument("is_k_leaf_connected: k must be >= 2");
    if (n < k + 1) throw std::invalid_argument("is_k_leaf_connected: need n >= k+1");
    if (!is_connected(g)) throw std::invalid_argument("is_k_leaf_connected: graph must be connected");

    ConnectivityVerdict out;
    if (k <= n - 2) {
        auto [kappa, cut] = vertex_connectivity_with_cut(g);
        out.connectivity = kappa;
        if (kappa < k + 1) {
            out.rejected_by_connectivity = true;
            VertexSet in_cut(n);
            for (int v : cut) in_cut.set(v);
            Graph rest = induced_subgraph(g, [&] {
                std::vector<int> keep;
                for (int v = 0; v < n; ++v)
                    if (!in_cut.test(v)) keep.push_back(v);
                return keep;
            }());
            auto comps = connected_components(rest);
            std::vector<int> outside;
            for (int v = 0; v < n; ++v)
                if (!in_cut.test(v)) outside.push_back(v);
            const int keep_a = outside[static_cast<size_t>(comps[0].first())];
            const int keep_b = outside[static_cast<size_t>(comps[1].first())];
            std::vector<int> s = cut;
            for (int v = 0; v < n && static_cast<int>(s.size()) < k; ++v)
                if (!in_cut.test(v) && v != keep_a && v != keep_b) s.push_back(v);
            std::sort(s.begin(), s.end());
            LeafVerdict lv = spanning_tree_with_leaf_set(g, s, budget);
            if (lv.decision != Decision::no)
                throw std::logic_error("is_k_leaf_connected: cut-derived set not refuted");
            out.decision = Decision::no;
            out.failing_set = std::move(s);
            out.stats.fast += 1;
            out.expansions += lv.expansions;
            return out;
        }
    }

    std::vector<int> s(static_cast<size_t>(k));
    std::iota(s.begin(), s.end(), 0);
    bool exhausted_any = false;
    while (true) {
        LeafVerdict lv = spanning_tree_with_leaf_set(g, s, budget);
        out.expansions += lv.expansions;
        if (lv.searched)
            out.stats.searched += 1;
        else
            out.stats.fast += 1;
        if (lv.decision == Decision::no) {
            out.decision = Decision::no;
            out.failing_set = s;
            return out;
        }
        if (lv.decision == Decision::budget_exhausted) exhausted_any = true;
        // colex successor
        bool moved = false;
        for (int i = 0; i < k; ++i) {
            const int limit = (i + 1 < k) ? s[static_cast<size_t>(i + 1)] : n;
            if (s[static_cast<size_t>(i)] + 1 < limit) {
                ++s[static_cast<size_t>(i)];
                for (int j = 0; j < i; ++j) s[static_cast<size_t>(j)] = j;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    out.decision = exhausted_any ? Decision::budget_exhausted : Decision::yes;
    return out;
}

// Naive reference: every acyclic (n-1)-edge subset is a spanning tree;
// collect the leaf sets as bit masks. Independent of the decider's search
// path on purpose, so it can serve as its oracle.
inline std::set<uint64_t> oracle_leaf_sets(const Graph& g) {
    const int n = g.n();
    if (n < 1) throw std::invalid_argument("oracle_leaf_sets: empty graph");
    if (n > kOracleVertexLimit)
        throw capability_error("oracle_leaf_sets: limited to " +
                               std::to_string(kOracleVertexLimit) + " vertices, got " +
                               std::to_string(n));
    if (!is_connected(g)) throw std::invalid_argument("oracle_leaf_sets: graph must be connected");

    std::set<uint64_t> out;
    if (n == 1) {
        out.insert(0);
        return out;
    }
    const auto es = g.edges();
    const int m = static_cast<int>(es.size());
    const int r = n - 1;
    if (m < r) return out;

    std::vector<int> idx(static_cast<size_t>(r));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> par(static_cast<size_t>(n));
    std::vector<int> deg(static_cast<size_t>(n));
    auto root = [&](int x) {
        while (par[static_cast<size_t>(x)] != x) {
            par[static_cast<size_t>(x)] = par[static_cast<size_t>(par[static_cast<size_t>(x)])];
            x = par[static_cast<size_t>(x)];
        }
        return x;
    };
    while (true) {
        std::iota(par.begin(), par.end(), 0);
        std::fill(deg.begin(), deg.end(), 0);
        bool tree = true;
        for (int e : idx) {
            const auto [a, b] = es[static_cast<size_t>(e)];
            const int ra = root(a), rb = root(b);
            if (ra == rb) {
                tree = false;
                break;
            }
            par[static_cast<size_t>(ra)] = rb;
            ++deg[static_cast<size_t>(a)];
            ++deg[static_cast<size_t>(b)];
        }
        if (tree) {
            uint64_t mask = 0;
            for (int v = 0; v < n; ++v)
                if (deg[static_cast<size_t>(v)] == 1) mask |= uint64_t{1} << v;
            out.insert(mask);
        }
        int i = r - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - r + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < r; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace leafcon
