#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <leafcon/conditions.hpp>

using namespace leafcon;
using Catch::Matchers::WithinAbs;

TEST_CASE("edge thresholds at pinned values") {
    CHECK(threshold_edges(ThresholdKind::n3, 19, 2) == 131);
    CHECK(threshold_edges(ThresholdKind::n2, 9, 2) == 27);
    CHECK(threshold_edges(ThresholdKind::n1, 10, 3) == 40);
    CHECK(threshold_edges(ThresholdKind::ht, 15, 2) == 84);

    CHECK(threshold_applicable(ThresholdKind::n1, 10, 3));
    CHECK_FALSE(threshold_applicable(ThresholdKind::n1, 10, 7));
    CHECK_FALSE(threshold_applicable(ThresholdKind::n3, 12, 2));
    CHECK_FALSE(threshold_applicable(ThresholdKind::ht, 14, 2));

    CHECK_THROWS_AS(threshold_edges(ThresholdKind::n1, 10, 7), std::invalid_argument);
    CHECK_THROWS_AS(threshold_edges(ThresholdKind::n2, 7, 4), std::invalid_argument);
    CHECK_THROWS_AS(threshold_edges(ThresholdKind::n3, 18, 2), std::invalid_argument);
    CHECK_THROWS_AS(threshold_edges(ThresholdKind::ht, 14, 2), std::invalid_argument);
}

TEST_CASE("threshold strengths are ordered where all apply") {
    for (int k = 2; k <= 3; ++k)
        for (int n = k + 17; n <= k + 30; ++n) {
            const long long e3 = threshold_edges(ThresholdKind::n3, n, k);
            const long long e2 = threshold_edges(ThresholdKind::n2, n, k);
            const long long e1 = threshold_edges(ThresholdKind::n1, n, k);
            CHECK(e3 < e2);
            CHECK(e2 < e1);
        }
}

TEST_CASE("degree condition on pinned profiles") {
    DegreeProfile failing;
    failing.degrees = {3, 3, 5, 5, 5, 5, 7, 7};
    failing.min_degree = 3;
    failing.edge_count = 20;
    const DegreeConditionResult r = degree_condition(failing, 2);
    CHECK_FALSE(r.holds);
    REQUIRE(r.violating_i.has_value());
    CHECK(*r.violating_i == 3);

    const DegreeConditionResult ok = degree_condition(degree_profile(Graph::complete(8)), 2);
    CHECK(ok.holds);
    CHECK_FALSE(ok.violating_i.has_value());

    CHECK_THROWS_AS(degree_condition(degree_profile(Graph::complete(4)), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(degree_condition(degree_profile(Graph::complete(8)), 1),
                    std::invalid_argument);
}

TEST_CASE("spectral thresholds at pinned values") {
    const SpectralThresholds t = spectral_thresholds(19, 2);
    CHECK_THAT(t.rho_min, WithinAbs(1.0 + std::sqrt(209.0), 1e-12));
    CHECK_THAT(t.q_min, WithinAbs(30.0 + 28.0 / 18.0, 1e-12));
    CHECK_THAT(t.rho_complement_max, WithinAbs(std::sqrt(17.0 * 40.0 / 19.0), 1e-12));
    CHECK_THROWS_AS(spectral_thresholds(18, 2), std::invalid_argument);
}

TEST_CASE("condition report on a small complete graph") {
    const ConditionReport r = evaluate_conditions(Graph::complete(5), 2, true);
    CHECK(r.n == 5);
    CHECK(r.edges == 10);
    CHECK(r.min_degree == 4);
    CHECK(r.min_degree_ok);
    CHECK(r.connectivity_ok);
    CHECK_FALSE(r.edge_n1.applicable);
    CHECK_FALSE(r.edge_n2.applicable);
    CHECK_FALSE(r.edge_n3.applicable);
    CHECK(r.degree.applicable);
    CHECK(r.degree.holds);
    CHECK_FALSE(r.spectral_rho.applicable);
    CHECK(r.closure_added_edges == 0);
    CHECK_FALSE(r.closure_exception.has_value());
    REQUIRE(r.verdict.has_value());
    CHECK(r.verdict->decision == Decision::yes);
}

TEST_CASE("condition report on a sparse path") {
    const ConditionReport r = evaluate_conditions(Graph::path(4), 2, true);
    CHECK_FALSE(r.min_degree_ok);
    CHECK_FALSE(r.connectivity_ok);
    CHECK_FALSE(r.degree.applicable);
    CHECK(r.closure_added_edges == 0);
    REQUIRE(r.verdict.has_value());
    CHECK(r.verdict->decision == Decision::no);
}

TEST_CASE("edge threshold exception carries a recognized closure") {
    const Graph g = build_family(FamilyId::k3_clique_2k1, 12);
    const ConditionReport r = evaluate_conditions(g, 2, true);
    CHECK(r.edges == 51);
    CHECK(r.edge_n2.applicable);
    CHECK(r.edge_n2.threshold == 51);
    CHECK(r.edge_n2.holds);
    CHECK_FALSE(r.edge_n1.holds);
    CHECK(r.closure_added_edges == 0);
    REQUIRE(r.closure_exception.has_value());
    CHECK(*r.closure_exception == FamilyId::k3_clique_2k1);
    REQUIRE(r.verdict.has_value());
    CHECK(r.verdict->decision == Decision::no);
}

TEST_CASE("spectral sufficiency fires on the dense join family") {
    const Graph g = build_family(FamilyId::kk_clique_k2, 19, 2);
    const ConditionReport r = evaluate_conditions(g, 2, false);
    REQUIRE(r.spectral_rho.applicable);
    CHECK(r.spectral_rho.holds);
    CHECK(r.spectral_rho.value > r.spectral_rho.threshold);
    REQUIRE(r.spectral_rho_complement.applicable);
    CHECK(r.spectral_rho_complement.holds);
    CHECK(r.spectral_rho_complement.value < r.spectral_rho_complement.threshold);
    REQUIRE(r.closure_exception.has_value());
    CHECK(*r.closure_exception == FamilyId::kk_clique_k2);
    CHECK_FALSE(r.verdict.has_value());
}

TEST_CASE("condition report input validation") {
    CHECK_THROWS_AS(evaluate_conditions(Graph::complete(5), 1), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_conditions(Graph::complete(3), 3), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_conditions(Graph::empty(5), 2), std::invalid_argument);
}
