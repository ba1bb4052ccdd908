#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <leafcon/families.hpp>
#include <leafcon/leaf_connectivity.hpp>

using namespace leafcon;

namespace {

// Recomputes leaf membership from a parent array instead of trusting the
// decider's own witness check.
void check_witness(const Graph& g, const std::vector<int>& s, const std::vector<int>& parent) {
    const int n = g.n();
    REQUIRE(static_cast<int>(parent.size()) == n);
    std::vector<int> deg(static_cast<size_t>(n), 0);
    int roots = 0;
    for (int v = 0; v < n; ++v) {
        const int p = parent[static_cast<size_t>(v)];
        if (p < 0) {
            ++roots;
            continue;
        }
        REQUIRE(g.has_edge(v, p));
        ++deg[static_cast<size_t>(v)];
        ++deg[static_cast<size_t>(p)];
    }
    CHECK(roots == 1);
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.push_back(v);
    std::vector<int> want = s;
    std::sort(want.begin(), want.end());
    CHECK(leaves == want);
}

}  // namespace

TEST_CASE("cycle leaf pairs are exactly the edges") {
    const Graph c5 = Graph::cycle(5);
    const auto oracle = oracle_leaf_sets(c5);
    CHECK(oracle.size() == 5);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            const LeafVerdict verdict = spanning_tree_with_leaf_set(c5, {u, v});
            const bool expect = c5.has_edge(u, v);
            CHECK(verdict.decision == (expect ? Decision::yes : Decision::no));
            CHECK(oracle.count((uint64_t{1} << u) | (uint64_t{1} << v)) == (expect ? 1u : 0u));
            if (expect) {
                REQUIRE(verdict.witness_parent.has_value());
                check_witness(c5, {u, v}, *verdict.witness_parent);
            }
        }
}

TEST_CASE("star admits its leaf set and nothing else of that size") {
    const Graph star = Graph::complete_bipartite(1, 3);
    const LeafVerdict good = spanning_tree_with_leaf_set(star, {1, 2, 3});
    REQUIRE(good.decision == Decision::yes);
    check_witness(star, {1, 2, 3}, *good.witness_parent);

    const LeafVerdict bad = spanning_tree_with_leaf_set(star, {0, 1, 2});
    CHECK(bad.decision == Decision::no);
    CHECK(bad.refutation == RefutationTag::star_center_missing);
}

TEST_CASE("refutation tags identify the obstruction") {
    // Join pair of K_2 v (K_4 + K_2): the rest splits into two cliques.
    const Graph g = build_family(FamilyId::kk_clique_k2, 8, 2);
    const LeafVerdict split = spanning_tree_with_leaf_set(g, {0, 1});
    CHECK(split.decision == Decision::no);
    CHECK(split.refutation == RefutationTag::no_internal_spanning_tree);
    CHECK_FALSE(split.searched);

    // Pendant vertex whose only neighbor also has to be a leaf.
    const Graph pendant = Graph::build(4, {{1, 2}, {2, 3}, {1, 3}, {0, 1}});
    const LeafVerdict isolated = spanning_tree_with_leaf_set(pendant, {0, 1});
    CHECK(isolated.decision == Decision::no);
    CHECK(isolated.refutation == RefutationTag::s_vertex_isolated_from_internals);

    // P_3 cannot shed its middle vertex.
    const LeafVerdict star_miss = spanning_tree_with_leaf_set(Graph::path(3), {0, 1});
    CHECK(star_miss.decision == Decision::no);
    CHECK(star_miss.refutation == RefutationTag::star_center_missing);

    // Non-adjacent rim pair of the 5-wheel needs the full search plus the
    // leaf matching to succeed.
    const Graph wheel = Graph::build(
        6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    const LeafVerdict wheel_pair = spanning_tree_with_leaf_set(wheel, {1, 3});
    CHECK(wheel_pair.decision == Decision::yes);
}

TEST_CASE("exhausted search refutes by matching infeasibility") {
    // K_{1,4} with two rim vertices in S: the interior path 3-0-4 keeps its
    // endpoints as tree leaves, and neither is adjacent to S.
    const Graph g = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    const LeafVerdict v = spanning_tree_with_leaf_set(g, {1, 2});
    CHECK(v.decision == Decision::no);
    CHECK(v.refutation == RefutationTag::matching_infeasible_exhausted);
    CHECK(v.searched);

    // Interior path 2-0-3 with one S vertex at each end succeeds.
    const Graph h = Graph::build(5, {{0, 2}, {0, 3}, {1, 2}, {3, 4}});
    const LeafVerdict w = spanning_tree_with_leaf_set(h, {1, 4});
    REQUIRE(w.decision == Decision::yes);
    check_witness(h, {1, 4}, *w.witness_parent);

    // Same interior, but both S vertices hang off the same endpoint: the
    // other endpoint of the interior path stays a tree leaf outside S.
    const Graph f = Graph::build(5, {{0, 2}, {0, 3}, {1, 2}, {4, 2}});
    const LeafVerdict x = spanning_tree_with_leaf_set(f, {1, 4});
    CHECK(x.decision == Decision::no);
    CHECK(x.refutation == RefutationTag::matching_infeasible_exhausted);
    CHECK(x.searched);
}

TEST_CASE("tiny budgets surface as a distinct verdict") {
    const Graph k5 = Graph::complete(5);
    const LeafVerdict v = spanning_tree_with_leaf_set(k5, {0, 1}, 1);
    CHECK(v.decision == Decision::budget_exhausted);
    CHECK(v.searched);

    const ConnectivityVerdict overall = is_k_leaf_connected(k5, 2, 1);
    CHECK(overall.decision == Decision::budget_exhausted);
}

TEST_CASE("complete graphs are k-leaf-connected for every admissible k") {
    for (int n = 3; n <= 6; ++n) {
        const Graph g = Graph::complete(n);
        for (int k = 2; k <= n - 1; ++k) {
            const ConnectivityVerdict v = is_k_leaf_connected(g, k);
            CHECK(v.holds());
            CHECK_FALSE(v.failing_set.has_value());
        }
    }
}

TEST_CASE("low connectivity rejects without sweeping") {
    const ConnectivityVerdict v = is_k_leaf_connected(Graph::cycle(5), 2);
    CHECK(v.decision == Decision::no);
    CHECK(v.rejected_by_connectivity);
    REQUIRE(v.connectivity.has_value());
    CHECK(*v.connectivity == 2);
    REQUIRE(v.failing_set.has_value());
    CHECK(v.failing_set->size() == 2);
    CHECK(v.stats.fast + v.stats.searched <= 1);
}

TEST_CASE("k equal to n-1 skips the connectivity reject") {
    const Graph star = Graph::complete_bipartite(1, 3);
    const ConnectivityVerdict v = is_k_leaf_connected(star, 3);
    CHECK(v.decision == Decision::no);
    CHECK_FALSE(v.rejected_by_connectivity);
    CHECK_FALSE(v.connectivity.has_value());
    REQUIRE(v.failing_set.has_value());
    CHECK(*v.failing_set == std::vector<int>{0, 1, 2});
}

TEST_CASE("first failing set is reported in colex order") {
    // Two join vertices of K_3 v (K_3 + 2K_1) cannot both be leaves: the
    // interior pins both independent vertices as leaves and still needs a
    // third. {0,1} is also the colex-first pair.
    const Graph g = build_family(FamilyId::k3_clique_2k1, 8);
    const ConnectivityVerdict v = is_k_leaf_connected(g, 2);
    CHECK(v.decision == Decision::no);
    REQUIRE(v.failing_set.has_value());
    CHECK(*v.failing_set == std::vector<int>{0, 1});
}

TEST_CASE("input validation") {
    const Graph k4 = Graph::complete(4);
    CHECK_THROWS_AS(is_k_leaf_connected(k4, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_k_leaf_connected(k4, 4), std::invalid_argument);
    CHECK_THROWS_AS(is_k_leaf_connected(Graph::empty(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(spanning_tree_with_leaf_set(k4, {0}), std::invalid_argument);
    CHECK_THROWS_AS(spanning_tree_with_leaf_set(k4, {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(spanning_tree_with_leaf_set(k4, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(spanning_tree_with_leaf_set(k4, {0, 9}), std::invalid_argument);
    CHECK_THROWS_AS(spanning_tree_with_leaf_set(k4, {0, 1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(oracle_leaf_sets(Graph::complete(10)), capability_error);
}

TEST_CASE("oracle agrees with hand-computed trees") {
    const auto p3 = oracle_leaf_sets(Graph::path(3));
    CHECK(p3 == std::set<uint64_t>{0b101});

    const auto star = oracle_leaf_sets(Graph::complete_bipartite(1, 3));
    CHECK(star == std::set<uint64_t>{0b1110});

    const auto single = oracle_leaf_sets(Graph::complete(1));
    CHECK(single == std::set<uint64_t>{0});

    // K_4 spanning trees: 16 in total, leaf sets are all pairs and all
    // triples.
    const auto k4 = oracle_leaf_sets(Graph::complete(4));
    std::set<uint64_t> expect;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) expect.insert((uint64_t{1} << a) | (uint64_t{1} << b));
    for (int skip = 0; skip < 4; ++skip) expect.insert(0b1111ull ^ (uint64_t{1} << skip));
    CHECK(k4 == expect);
}
