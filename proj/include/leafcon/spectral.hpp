#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace leafcon {

using Matrix = std::vector<std::vector<double>>;

enum class MatrixKind { adjacency, signless_laplacian };

inline constexpr double kSpectralTol = 1e-10;

inline Matrix adjacency_matrix(const Graph& g) {
    const int n = g.n();
    Matrix a(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1.0;
        a[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1.0;
    }
    return a;
}

inline Matrix signless_laplacian_matrix(const Graph& g) {
    Matrix q = adjacency_matrix(g);
    for (int v = 0; v < g.n(); ++v)
        q[static_cast<size_t>(v)][static_cast<size_t>(v)] = static_cast<double>(g.degree(v));
    return q;
}

inline Matrix graph_matrix(const Graph& g, MatrixKind kind) {
    return kind == MatrixKind::adjacency ? adjacency_matrix(g) : signless_laplacian_matrix(g);
}

// Cyclic Jacobi diagonalization. Returns all eigenvalues ascending; stops
// once the off-diagonal Frobenius norm drops below tol (which then bounds
// the absolute eigenvalue error).
inline std::vector<double> symmetric_eigenvalues(Matrix a, double tol = kSpectralTol) {
    const size_t n = a.size();
    if (tol <= 0) throw std::invalid_argument("symmetric_eigenvalues: tol must be positive");
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("symmetric_eigenvalues: matrix not square");
        for (size_t j = 0; j < n; ++j) {
            if (!std::isfinite(a[i][j]))
                throw std::invalid_argument("symmetric_eigenvalues: non-finite entry");
            if (a[i][j] != a[j][i])
                throw std::invalid_argument("symmetric_eigenvalues: matrix not symmetric");
        }
    }
    if (n < 2) {
        std::vector<double> ev;
        if (n == 1) ev.push_back(a[0][0]);
        return ev;
    }

    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (size_t p = 0; p + 1 < n; ++p)
            for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (std::sqrt(2.0 * off) <= tol) {
            std::vector<double> ev(n);
            for (size_t i = 0; i < n; ++i) ev[i] = a[i][i];
            std::sort(ev.begin(), ev.end());
            return ev;
        }
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                const double small = 100.0 * std::abs(apq);
                if (std::abs(a[p][p]) + small == std::abs(a[p][p]) &&
                    std::abs(a[q][q]) + small == std::abs(a[q][q])) {
                    a[p][q] = a[q][p] = 0.0;
                    continue;
                }
                if (apq == 0.0) continue;
                const double h = a[q][q] - a[p][p];
                double t;
                if (std::abs(h) + small == std::abs(h)) {
                    t = apq / h;
                } else {
                    const double theta = h / (2.0 * apq);
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a[p][p] -= t * apq;
                a[q][q] += t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r][p];
                    const double arq = a[r][q];
                    a[r][p] = arp - s * (arq + tau * arp);
                    a[p][r] = a[r][p];
                    a[r][q] = arq + s * (arp - tau * arq);
                    a[q][r] = a[r][q];
                }
            }
        }
    }
    throw std::runtime_error("symmetric_eigenvalues: Jacobi sweep cap exceeded");
}

inline double dominant_eigenvalue(const Matrix& m, double tol = kSpectralTol) {
    if (m.empty()) throw std::invalid_argument("dominant_eigenvalue: empty matrix");
    return symmetric_eigenvalues(m, tol).back();
}

inline double adjacency_radius(const Graph& g, double tol = kSpectralTol) {
    if (g.n() == 0) throw std::invalid_argument("adjacency_radius: empty graph");
    return dominant_eigenvalue(adjacency_matrix(g), tol);
}

inline double signless_laplacian_radius(const Graph& g, double tol = kSpectralTol) {
    if (g.n() == 0) throw std::invalid_argument("signless_laplacian_radius: empty graph");
    return dominant_eigenvalue(signless_laplacian_matrix(g), tol);
}

inline double complement_adjacency_radius(const Graph& g, double tol = kSpectralTol) {
    return adjacency_radius(complement(g), tol);
}

struct SpectralReport {
    double rho = 0.0;
    double q = 0.0;
    double rho_complement = 0.0;
    double tolerance = kSpectralTol;
};

inline SpectralReport spectral_report(const Graph& g, double tol = kSpectralTol) {
    SpectralReport r;
    r.rho = adjacency_radius(g, tol);
    r.q = signless_laplacian_radius(g, tol);
    r.rho_complement = complement_adjacency_radius(g, tol);
    r.tolerance = tol;
    return r;
}

// f(x; n, e) = (x-1)/2 + sqrt(2e - nx + (x+1)^2/4), the minimum-degree
// spectral radius bound; nonincreasing in x on its real domain.
inline double hong_f(double x, int n, long long e) {
    if (n < 1) throw std::invalid_argument("hong_f: n must be >= 1");
    if (e < 0 || 2 * e > static_cast<long long>(n) * (n - 1))
        throw std::invalid_argument("hong_f: edge count out of range");
    if (!(x >= 0.0 && x <= n - 1.0)) throw std::invalid_argument("hong_f: x must be in [0, n-1]");
    const double radicand = 2.0 * static_cast<double>(e) - static_cast<double>(n) * x +
                            (x + 1.0) * (x + 1.0) / 4.0;
    if (radicand < 0.0)
        throw std::domain_error("hong_f: negative radicand, bound inapplicable at x=" +
                                std::to_string(x));
    return (x - 1.0) / 2.0 + std::sqrt(radicand);
}

// rho(G) <= f(delta); equality on complete graphs.
inline double hong_bound(const Graph& g) {
    const DegreeProfile p = degree_profile(g);
    return hong_f(static_cast<double>(p.min_degree), g.n(), p.edge_count);
}

// q(G) <= 2e/(n-1) + n - 2 for connected graphs; equality on complete graphs.
inline double feng_yu_bound(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("feng_yu_bound: need n >= 2");
    if (!is_connected(g)) throw std::invalid_argument("feng_yu_bound: graph must be connected");
    return 2.0 * static_cast<double>(g.edge_count()) / (g.n() - 1) + g.n() - 2;
}

struct QuotientMatrix {
    std::vector<std::vector<int>> blocks;
    Matrix entries;  // average block row sums, entries[i][j] over block i rows
    bool equitable = false;
};

inline QuotientMatrix quotient_matrix(const Graph& g, MatrixKind kind,
                                      const std::vector<std::vector<int>>& partition) {
    const int n = g.n();
    const size_t m = partition.size();
    if (m == 0) throw std::invalid_argument("quotient_matrix: empty partition");
    VertexSet covered(n);
    std::vector<VertexSet> mask;
    mask.reserve(m);
    for (const auto& block : partition) {
        if (block.empty()) throw std::invalid_argument("quotient_matrix: empty block");
        VertexSet bm(n);
        for (int v : block) {
            if (v < 0 || v >= n) throw std::invalid_argument("quotient_matrix: vertex out of range");
            if (covered.test(v))
                throw std::invalid_argument("quotient_matrix: vertex " + std::to_string(v) +
                                            " appears in two blocks");
            covered.set(v);
            bm.set(v);
        }
        mask.push_back(std::move(bm));
    }
    if (static_cast<int>(covered.count()) != n)
        throw std::invalid_argument("quotient_matrix: partition does not cover the vertex set");

    QuotientMatrix out;
    out.blocks = partition;
    out.entries.assign(m, std::vector<double>(m, 0.0));
    out.equitable = true;
    for (size_t i = 0; i < m; ++i) {
        std::vector<long long> total(m, 0);
        std::vector<long long> first(m, 0);
        bool first_row = true;
        for (int v : partition[i]) {
            for (size_t j = 0; j < m; ++j) {
                long long row = static_cast<long long>((g.neighbors(v) & mask[j]).count());
                if (kind == MatrixKind::signless_laplacian && i == j) row += g.degree(v);
                total[j] += row;
                if (first_row)
                    first[j] = row;
                else if (first[j] != row)
                    out.equitable = false;
            }
            first_row = false;
        }
        for (size_t j = 0; j < m; ++j)
            out.entries[i][j] =
                static_cast<double>(total[j]) / static_cast<double>(partition[i].size());
    }
    return out;
}

// Largest eigenvalue of the quotient via the size-weighted symmetrization
// B'_{ij} = B_{ij} sqrt(|X_i|/|X_j|), a similarity transform of B.
inline double quotient_largest_eigenvalue(const QuotientMatrix& qm, double tol = kSpectralTol) {
    const size_t m = qm.entries.size();
    if (m == 0) throw std::invalid_argument("quotient_largest_eigenvalue: empty quotient");
    Matrix sym(m, std::vector<double>(m, 0.0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i; j < m; ++j) {
            const double scale = std::sqrt(static_cast<double>(qm.blocks[i].size()) /
                                           static_cast<double>(qm.blocks[j].size()));
            sym[i][j] = qm.entries[i][j] * scale;
            sym[j][i] = sym[i][j];
        }
    return dominant_eigenvalue(sym, tol);
}

// Monic cubic x^3 + c2 x^2 + c1 x + c0.
struct CubicPoly {
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;

    double eval(double x) const { return ((x + c2) * x + c1) * x + c0; }
};

// Largest real root, by bisection on the interval where the cubic is
// increasing past its last sign change; Cauchy bound contains all roots.
inline double largest_real_root(const CubicPoly& p, double tol = 1e-12) {
    const double bound = 1.0 + std::max({std::abs(p.c2), std::abs(p.c1), std::abs(p.c0)});
    double lo = -bound, hi = bound;
    const double quarter_disc = p.c2 * p.c2 - 3.0 * p.c1;
    if (quarter_disc > 0.0) {
        const double r1 = (-p.c2 - std::sqrt(quarter_disc)) / 3.0;  // local max
        const double r2 = (-p.c2 + std::sqrt(quarter_disc)) / 3.0;  // local min
        if (p.eval(r2) <= 0.0)
            lo = r2;
        else
            hi = r1;
    }
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = lo + (hi - lo) / 2.0;
        if (p.eval(mid) >= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return lo + (hi - lo) / 2.0;
}

// Quotient characteristic polynomials and complement radii of the three
// dense join families, as closed forms in n (and k for the first family).
// Validity gates follow the families' block-existence ranges.

inline CubicPoly charpoly_k3_clique_2k1(int n, MatrixKind kind) {
    if (n < 6) throw std::invalid_argument("charpoly_k3_clique_2k1: need n >= 6");
    if (kind == MatrixKind::adjacency)
        return {-(n - 4.0), -(n + 3.0), 6.0 * n - 36.0};
    return {-(3.0 * n - 5.0), 2.0 * n * n - n - 24.0, -6.0 * n * n + 42.0 * n - 72.0};
}

inline CubicPoly charpoly_k4_clique_3k1(int n, MatrixKind kind) {
    if (n < 8) throw std::invalid_argument("charpoly_k4_clique_3k1: need n >= 8");
    if (kind == MatrixKind::adjacency)
        return {-(n - 5.0), -(n + 8.0), 12.0 * n - 96.0};
    return {-3.0 * (n - 2.0), 2.0 * n * n - 48.0, -8.0 * n * n + 72.0 * n - 160.0};
}

inline double complement_radius_k3_clique_2k1(int n) {
    if (n < 6) throw std::invalid_argument("complement_radius_k3_clique_2k1: need n >= 6");
    return (1.0 + std::sqrt(8.0 * n - 39.0)) / 2.0;
}

inline double complement_radius_k4_clique_3k1(int n) {
    if (n < 7) throw std::invalid_argument("complement_radius_k4_clique_3k1: need n >= 7");
    return 1.0 + std::sqrt(3.0 * n - 20.0);
}

inline double complement_radius_k_join_k2(int n, int k) {
    if (k < 2 || n < k + 3) throw std::invalid_argument("complement_radius_k_join_k2: need k >= 2, n >= k+3");
    return std::sqrt(2.0 * (n - k - 2.0));
}

}  // namespace leafcon
