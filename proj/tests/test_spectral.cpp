#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>
#include <leafcon/families.hpp>
#include <leafcon/spectral.hpp>

using namespace leafcon;
using Catch::Matchers::WithinAbs;

TEST_CASE("eigenvalues of small named graphs") {
    const auto k4 = symmetric_eigenvalues(adjacency_matrix(Graph::complete(4)));
    REQUIRE(k4.size() == 4);
    CHECK_THAT(k4[0], WithinAbs(-1.0, 1e-10));
    CHECK_THAT(k4[1], WithinAbs(-1.0, 1e-10));
    CHECK_THAT(k4[2], WithinAbs(-1.0, 1e-10));
    CHECK_THAT(k4[3], WithinAbs(3.0, 1e-10));

    const auto p3 = symmetric_eigenvalues(adjacency_matrix(Graph::path(3)));
    CHECK_THAT(p3[0], WithinAbs(-std::sqrt(2.0), 1e-10));
    CHECK_THAT(p3[1], WithinAbs(0.0, 1e-10));
    CHECK_THAT(p3[2], WithinAbs(std::sqrt(2.0), 1e-10));

    const auto c4 = symmetric_eigenvalues(adjacency_matrix(Graph::cycle(4)));
    CHECK_THAT(c4[0], WithinAbs(-2.0, 1e-10));
    CHECK_THAT(c4[3], WithinAbs(2.0, 1e-10));
}

TEST_CASE("eigensolver rejects malformed matrices") {
    CHECK_THROWS_AS(symmetric_eigenvalues({{1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(symmetric_eigenvalues({{1.0, 2.0}, {2.1, 1.0}}), std::invalid_argument);
    const double nan = std::nan("");
    CHECK_THROWS_AS(symmetric_eigenvalues({{nan, 0.0}, {0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(dominant_eigenvalue(Matrix{}), std::invalid_argument);
}

TEST_CASE("radii of standard graphs") {
    CHECK_THAT(adjacency_radius(Graph::complete(5)), WithinAbs(4.0, 1e-10));
    CHECK_THAT(signless_laplacian_radius(Graph::complete(7)), WithinAbs(12.0, 1e-10));
    CHECK_THAT(signless_laplacian_radius(Graph::complete(12)), WithinAbs(22.0, 1e-10));
    CHECK_THAT(adjacency_radius(Graph::complete_bipartite(2, 6)), WithinAbs(std::sqrt(12.0), 1e-10));

    const SpectralReport rep = spectral_report(Graph::complete(5));
    CHECK_THAT(rep.rho, WithinAbs(4.0, 1e-10));
    CHECK_THAT(rep.q, WithinAbs(8.0, 1e-10));
    CHECK_THAT(rep.rho_complement, WithinAbs(0.0, 1e-10));
}

TEST_CASE("edge-count radius bound and its one-variable helper") {
    // Equality on the cycle: f evaluated at delta=2 collapses to 2.
    CHECK_THAT(hong_bound(Graph::cycle(5)), WithinAbs(2.0, 1e-10));
    CHECK_THAT(adjacency_radius(Graph::cycle(5)), WithinAbs(2.0, 1e-10));

    CHECK_THAT(feng_yu_bound(Graph::cycle(5)), WithinAbs(5.5, 1e-10));
    CHECK_THAT(signless_laplacian_radius(Graph::cycle(5)), WithinAbs(4.0, 1e-10));

    // Frozen spot values at n=10, e=30.
    CHECK_THAT(hong_f(3.0, 10, 30), WithinAbs(1.0 + std::sqrt(34.0), 1e-12));
    CHECK_THAT(hong_f(5.0, 10, 30), WithinAbs(2.0 + std::sqrt(19.0), 1e-12));
    CHECK(hong_f(3.0, 10, 30) >= hong_f(5.0, 10, 30));
    CHECK_THROWS_AS(hong_f(9.0, 10, 30), std::domain_error);

    CHECK_THROWS_AS(hong_f(-0.5, 10, 30), std::invalid_argument);
    CHECK_THROWS_AS(hong_f(9.5, 10, 30), std::invalid_argument);
    CHECK_THROWS_AS(hong_f(1.0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(hong_f(1.0, 5, 11), std::invalid_argument);
    CHECK_THROWS_AS(feng_yu_bound(Graph::complete(1)), std::invalid_argument);
}

TEST_CASE("equitable quotients reproduce the dominant eigenvalue") {
    const int n = 12;
    const Graph g = build_family(FamilyId::k4_clique_3k1, n);
    const std::vector<std::vector<int>> parts = {
        {0, 1, 2, 3}, {4, 5, 6, 7, 8}, {9, 10, 11}};

    const QuotientMatrix qa = quotient_matrix(g, MatrixKind::adjacency, parts);
    REQUIRE(qa.equitable);
    const std::vector<std::vector<double>> want_a = {{3, 5, 3}, {4, 4, 0}, {4, 0, 0}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK_THAT(qa.entries[i][j], WithinAbs(want_a[i][j], 1e-12));
    CHECK_THAT(quotient_largest_eigenvalue(qa),
               WithinAbs(adjacency_radius(g), 1e-8));

    const QuotientMatrix qq = quotient_matrix(g, MatrixKind::signless_laplacian, parts);
    REQUIRE(qq.equitable);
    const std::vector<std::vector<double>> want_q = {{14, 5, 3}, {4, 12, 0}, {4, 0, 4}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK_THAT(qq.entries[i][j], WithinAbs(want_q[i][j], 1e-12));
    CHECK_THAT(quotient_largest_eigenvalue(qq),
               WithinAbs(signless_laplacian_radius(g), 1e-8));
}

TEST_CASE("non-equitable partitions are flagged, bad partitions throw") {
    const QuotientMatrix q = quotient_matrix(Graph::path(4), MatrixKind::adjacency,
                                             {{0, 1}, {2, 3}});
    CHECK_FALSE(q.equitable);

    CHECK_THROWS_AS(quotient_matrix(Graph::path(4), MatrixKind::adjacency, {{0, 1}, {1, 2, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(quotient_matrix(Graph::path(4), MatrixKind::adjacency, {{0, 1}, {2}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(quotient_matrix(Graph::path(4), MatrixKind::adjacency,
                                    std::vector<std::vector<int>>{{0, 1, 2, 3}, {}}),
                    std::invalid_argument);
}

TEST_CASE("largest real root of monic cubics") {
    CHECK_THAT(largest_real_root({0.0, -1.0, 0.0}), WithinAbs(1.0, 1e-10));
    CHECK_THAT(largest_real_root({-6.0, 11.0, -6.0}), WithinAbs(3.0, 1e-10));
    CHECK_THAT(largest_real_root({0.0, 0.0, 1.0}), WithinAbs(-1.0, 1e-10));
    // Triple root: cancellation caps the attainable accuracy near cbrt(eps).
    CHECK_THAT(largest_real_root({-3.0, 3.0, -1.0}), WithinAbs(1.0, 1e-4));
}

TEST_CASE("family characteristic polynomials match dense spectra") {
    for (int n = 9; n <= 14; ++n) {
        const Graph g3 = build_family(FamilyId::k3_clique_2k1, n);
        CHECK_THAT(largest_real_root(charpoly_k3_clique_2k1(n, MatrixKind::adjacency)),
                   WithinAbs(adjacency_radius(g3), 1e-8));
        CHECK_THAT(largest_real_root(charpoly_k3_clique_2k1(n, MatrixKind::signless_laplacian)),
                   WithinAbs(signless_laplacian_radius(g3), 1e-8));

        const Graph g4 = build_family(FamilyId::k4_clique_3k1, n);
        CHECK_THAT(largest_real_root(charpoly_k4_clique_3k1(n, MatrixKind::adjacency)),
                   WithinAbs(adjacency_radius(g4), 1e-8));
        CHECK_THAT(largest_real_root(charpoly_k4_clique_3k1(n, MatrixKind::signless_laplacian)),
                   WithinAbs(signless_laplacian_radius(g4), 1e-8));
    }
    // Spot check the frozen coefficients at n=12.
    const CubicPoly a4 = charpoly_k4_clique_3k1(12, MatrixKind::adjacency);
    CHECK_THAT(a4.c2, WithinAbs(-7.0, 1e-12));
    CHECK_THAT(a4.c1, WithinAbs(-20.0, 1e-12));
    CHECK_THAT(a4.c0, WithinAbs(48.0, 1e-12));

    CHECK_THROWS_AS(charpoly_k3_clique_2k1(5, MatrixKind::adjacency), std::invalid_argument);
    CHECK_THROWS_AS(charpoly_k4_clique_3k1(7, MatrixKind::adjacency), std::invalid_argument);
}

TEST_CASE("complement radius closed forms") {
    for (int n = 9; n <= 14; ++n) {
        CHECK_THAT(complement_radius_k3_clique_2k1(n),
                   WithinAbs(complement_adjacency_radius(build_family(FamilyId::k3_clique_2k1, n)),
                             1e-9));
        CHECK_THAT(complement_radius_k4_clique_3k1(n),
                   WithinAbs(complement_adjacency_radius(build_family(FamilyId::k4_clique_3k1, n)),
                             1e-9));
        CHECK_THAT(complement_radius_k_join_k2(n, 3),
                   WithinAbs(complement_adjacency_radius(build_family(FamilyId::kk_clique_k2, n, 3)),
                             1e-9));
    }
    CHECK_THAT(complement_radius_k4_clique_3k1(12), WithinAbs(5.0, 1e-12));
    CHECK_THAT(complement_radius_k3_clique_2k1(12), WithinAbs((1.0 + std::sqrt(57.0)) / 2.0, 1e-12));
    CHECK_THROWS_AS(complement_radius_k_join_k2(4, 2), std::invalid_argument);
}
