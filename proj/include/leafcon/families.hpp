#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace leafcon {

// Named join-family constructors. Labeling convention everywhere: join
// block first, then the remaining blocks left to right as written in the
// family's formula.
enum class FamilyId {
    kk_clique_k2,     // K_k v (K_{n-k-2} + K_2), params n,k
    k3_clique_2k1,    // K_3 v (K_{n-5} + 2K_1), param n
    k4_clique_3k1,    // K_4 v (K_{n-7} + 3K_1), param n
    kk1_clique_2k1,   // K_{k+1} v (K_{n-k-3} + 2K_1), params n,k
    kk2_clique_3k1,   // K_{k+2} v (K_{n-k-5} + 3K_1), params n,k
    k3_clique_k2_k1,  // K_3 v (K_{n-6} + K_2 + K_1), param n
    k2_cliques,       // K_2 v (K_{n-t-1} + K_{t-1}), params n,t
    kt_clique_ind,    // K_t v (K_{n-2t+1} + (t-1)K_1), params n,t
    kt1_clique_ind,   // K_{t+1} v (K_{n-2t-1} + tK_1), params n,t
    k4_k2_3k1,        // K_4 v (K_2 + 3K_1), n = 9
    k6_6k1,           // K_6 v 6K_1, n = 12
    k5_5k1,           // K_5 v 5K_1, n = 10
    k4_star4_k1,      // K_4 v (K_{1,4} + K_1), n = 10
    k3_k25,           // K_3 v K_{2,5}, n = 10
    k4_4k1,           // K_4 v 4K_1, n = 8
    k3_star3_k1,      // K_3 v (K_{1,3} + K_1), n = 8
    k2_k24,           // K_2 v K_{2,4}, n = 8
};

struct FamilyInfo {
    FamilyId id;
    const char* tag;
    const char* formula;
    bool needs_k;
    bool needs_t;
    int fixed_n;  // 0 when n is a free parameter
};

inline const std::vector<FamilyInfo>& family_menu() {
    static const std::vector<FamilyInfo> menu = {
        {FamilyId::kk_clique_k2, "kk-clique-k2", "K_k v (K_{n-k-2} + K_2)", true, false, 0},
        {FamilyId::k3_clique_2k1, "k3-clique-2k1", "K_3 v (K_{n-5} + 2K_1)", false, false, 0},
        {FamilyId::k4_clique_3k1, "k4-clique-3k1", "K_4 v (K_{n-7} + 3K_1)", false, false, 0},
        {FamilyId::kk1_clique_2k1, "kk1-clique-2k1", "K_{k+1} v (K_{n-k-3} + 2K_1)", true, false, 0},
        {FamilyId::kk2_clique_3k1, "kk2-clique-3k1", "K_{k+2} v (K_{n-k-5} + 3K_1)", true, false, 0},
        {FamilyId::k3_clique_k2_k1, "k3-clique-k2-k1", "K_3 v (K_{n-6} + K_2 + K_1)", false, false, 0},
        {FamilyId::k2_cliques, "k2-cliques", "K_2 v (K_{n-t-1} + K_{t-1})", false, true, 0},
        {FamilyId::kt_clique_ind, "kt-clique-ind", "K_t v (K_{n-2t+1} + (t-1)K_1)", false, true, 0},
        {FamilyId::kt1_clique_ind, "kt1-clique-ind", "K_{t+1} v (K_{n-2t-1} + tK_1)", false, true, 0},
        {FamilyId::k4_k2_3k1, "k4-k2-3k1", "K_4 v (K_2 + 3K_1)", false, false, 9},
        {FamilyId::k6_6k1, "k6-6k1", "K_6 v 6K_1", false, false, 12},
        {FamilyId::k5_5k1, "k5-5k1", "K_5 v 5K_1", false, false, 10},
        {FamilyId::k4_star4_k1, "k4-star4-k1", "K_4 v (K_{1,4} + K_1)", false, false, 10},
        {FamilyId::k3_k25, "k3-k25", "K_3 v K_{2,5}", false, false, 10},
        {FamilyId::k4_4k1, "k4-4k1", "K_4 v 4K_1", false, false, 8},
        {FamilyId::k3_star3_k1, "k3-star3-k1", "K_3 v (K_{1,3} + K_1)", false, false, 8},
        {FamilyId::k2_k24, "k2-k24", "K_2 v K_{2,4}", false, false, 8},
    };
    return menu;
}

inline const FamilyInfo& family_info(FamilyId id) {
    for (const auto& fi : family_menu())
        if (fi.id == id) return fi;
    throw std::logic_error("family_info: unknown id");
}

inline const char* family_tag(FamilyId id) { return family_info(id).tag; }

inline std::optional<FamilyId> parse_family_tag(const std::string& tag) {
    for (const auto& fi : family_menu())
        if (tag == fi.tag) return fi.id;
    return std::nullopt;
}

namespace detail {

inline Graph join_blocks(int join_size, const std::vector<Graph>& blocks) {
    Graph rest = Graph::empty(0);
    for (const auto& b : blocks) rest = disjoint_union(rest, b);
    return join(Graph::complete(join_size), rest);
}

inline void require_family(bool ok, const char* tag, const std::string& what) {
    if (!ok) throw std::invalid_argument(std::string("build_family(") + tag + "): " + what);
}

}  // namespace detail

inline Graph build_family(FamilyId id, int n, int k = -1, int t = -1) {
    const FamilyInfo& fi = family_info(id);
    if (fi.needs_k) detail::require_family(k >= 2, fi.tag, "needs k >= 2");
    if (fi.needs_t) detail::require_family(t >= 2, fi.tag, "needs t >= 2");
    if (fi.fixed_n != 0)
        detail::require_family(n == fi.fixed_n, fi.tag,
                               "has fixed order n = " + std::to_string(fi.fixed_n));
    using G = Graph;
    switch (id) {
        case FamilyId::kk_clique_k2:
            detail::require_family(n >= k + 3, fi.tag, "needs n >= k+3");
            return detail::join_blocks(k, {G::complete(n - k - 2), G::complete(2)});
        case FamilyId::k3_clique_2k1:
            detail::require_family(n >= 6, fi.tag, "needs n >= 6");
            return detail::join_blocks(3, {G::complete(n - 5), G::empty(2)});
        case FamilyId::k4_clique_3k1:
            detail::require_family(n >= 7, fi.tag, "needs n >= 7");
            return detail::join_blocks(4, {G::complete(n - 7), G::empty(3)});
        case FamilyId::kk1_clique_2k1:
            detail::require_family(n >= k + 4, fi.tag, "needs n >= k+4");
            return detail::join_blocks(k + 1, {G::complete(n - k - 3), G::empty(2)});
        case FamilyId::kk2_clique_3k1:
            detail::require_family(n >= k + 6, fi.tag, "needs n >= k+6");
            return detail::join_blocks(k + 2, {G::complete(n - k - 5), G::empty(3)});
        case FamilyId::k3_clique_k2_k1:
            detail::require_family(n >= 7, fi.tag, "needs n >= 7");
            return detail::join_blocks(3, {G::complete(n - 6), G::complete(2), G::complete(1)});
        case FamilyId::k2_cliques:
            detail::require_family(2 * t <= n, fi.tag, "needs t <= n/2");
            return detail::join_blocks(2, {G::complete(n - t - 1), G::complete(t - 1)});
        case FamilyId::kt_clique_ind:
            detail::require_family(2 * t <= n, fi.tag, "needs t <= n/2");
            return detail::join_blocks(t, {G::complete(n - 2 * t + 1), G::empty(t - 1)});
        case FamilyId::kt1_clique_ind:
            detail::require_family(2 * t <= n - 1, fi.tag, "needs t <= (n-1)/2");
            return detail::join_blocks(t + 1, {G::complete(n - 2 * t - 1), G::empty(t)});
        case FamilyId::k4_k2_3k1:
            return detail::join_blocks(4, {G::complete(2), G::empty(3)});
        case FamilyId::k6_6k1:
            return detail::join_blocks(6, {G::empty(6)});
        case FamilyId::k5_5k1:
            return detail::join_blocks(5, {G::empty(5)});
        case FamilyId::k4_star4_k1:
            return detail::join_blocks(4, {G::complete_bipartite(1, 4), G::complete(1)});
        case FamilyId::k3_k25:
            return detail::join_blocks(3, {G::complete_bipartite(2, 5)});
        case FamilyId::k4_4k1:
            return detail::join_blocks(4, {G::empty(4)});
        case FamilyId::k3_star3_k1:
            return detail::join_blocks(3, {G::complete_bipartite(1, 3), G::complete(1)});
        case FamilyId::k2_k24:
            return detail::join_blocks(2, {G::complete_bipartite(2, 4)});
    }
    throw std::logic_error("build_family: unknown id");
}

// The ten instances of the k=2 edge-threshold exception list (the
// parameterized first member at both n = 9 and n = 10, the other eight at
// their fixed orders).
inline std::vector<std::pair<std::string, Graph>> edge_threshold_exception_graphs() {
    std::vector<std::pair<std::string, Graph>> out;
    auto add = [&out](FamilyId id, int n) {
        out.emplace_back(std::string(family_tag(id)) + "(n=" + std::to_string(n) + ")",
                         build_family(id, n));
    };
    add(FamilyId::k3_clique_2k1, 9);
    add(FamilyId::k3_clique_2k1, 10);
    add(FamilyId::k4_k2_3k1, 9);
    add(FamilyId::k6_6k1, 12);
    add(FamilyId::k5_5k1, 10);
    add(FamilyId::k4_star4_k1, 10);
    add(FamilyId::k3_k25, 10);
    add(FamilyId::k4_4k1, 8);
    add(FamilyId::k3_star3_k1, 8);
    add(FamilyId::k2_k24, 8);
    return out;
}

namespace detail {

inline bool component_is_clique(const Graph& g, const VertexSet& comp) {
    const int want = static_cast<int>(comp.count()) - 1;
    for (int v = comp.first(); v >= 0; v = comp.next(v))
        if (static_cast<int>((g.neighbors(v) & comp).count()) != want) return false;
    return true;
}

// Residue of G after removing its universal vertices must be a disjoint
// union of cliques with the given size multiset (sorted ascending).
inline bool universal_join_with_cliques(const Graph& g, int join_size,
                                        std::vector<int> expected_sizes) {
    const int n = g.n();
    std::vector<int> rest;
    int universal = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1)
            ++universal;
        else
            rest.push_back(v);
    }
    if (universal != join_size) return false;
    std::erase(expected_sizes, 0);
    std::sort(expected_sizes.begin(), expected_sizes.end());
    Graph r = induced_subgraph(g, rest);
    auto comps = connected_components(r);
    std::vector<int> sizes;
    for (const auto& c : comps) {
        if (!component_is_clique(r, c)) return false;
        sizes.push_back(static_cast<int>(c.count()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes == expected_sizes;
}

}  // namespace detail

// Structural recognizer for the three families that can survive as
// (n+k-1)-closures of non-k-leaf-connected dense graphs. Each family is
// join-rigid: its join block is exactly the set of universal vertices, so
// equality of the residue's clique decomposition decides isomorphism.
inline std::optional<FamilyId> recognize_exception(const Graph& g, int k) {
    const int n = g.n();
    if (k >= 2 && n >= k + 3 &&
        detail::universal_join_with_cliques(g, k, {n - k - 2, 2}))
        return FamilyId::kk_clique_k2;
    if (n >= 6 && detail::universal_join_with_cliques(g, 3, {n - 5, 1, 1}))
        return FamilyId::k3_clique_2k1;
    if (n >= 7 && detail::universal_join_with_cliques(g, 4, {n - 7, 1, 1, 1}))
        return FamilyId::k4_clique_3k1;
    return std::nullopt;
}

}  // namespace leafcon
