#include <random>

#include "cnr/apolarity.hpp"
#include "doctest.h"

using namespace cnr;

namespace {

QConfig config_from_ints(int d, int n, const std::vector<std::vector<int>>& rows) {
    QConfig cfg;
    cfg.d = d;
    cfg.n = n;
    cfg.A = QMatrix(d, n);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < n; ++j) cfg.A.at(i, j) = BigRational(rows[i][j]);
    return cfg;
}

const QConfig& cayley_like() {
    static QConfig cfg = config_from_ints(3, 6,
                                          {{1, 0, 0, 1, -1, 0},
                                           {0, 1, 0, -1, 0, 1},
                                           {0, 0, 1, 0, 1, -1}});
    return cfg;
}

}  // namespace

TEST_CASE("kernel of the six-special-points matrix has dimension 3") {
    auto k = kernel_basis(cayley_like().A);
    CHECK(k.size() == 3);
}

TEST_CASE("psi on trivially constrained degrees") {
    std::mt19937_64 rng(5);
    QConfig cfg = random_generic_config(3, 6, rng);
    // u_j >= r for all j leaves S_r unconstrained
    DegreeVector deg(2, std::vector<int>(6, 2));
    CHECK(psi_direct(cfg, deg) == binom(2 + 2, 2));
    CHECK(psi_direct(cfg, DegreeVector(0, std::vector<int>(6, 0))) == 1);
}

TEST_CASE("psi(3,2^6) = 4 for generic planar six-point configurations") {
    std::mt19937_64 rng(42);
    DegreeVector deg(3, std::vector<int>(6, 2));
    QConfig cfg1 = random_generic_config(3, 6, rng);
    QConfig cfg2 = random_generic_config(3, 6, rng);
    CHECK(psi_direct(cfg1, deg) == 4);
    CHECK(psi_direct(cfg2, deg) == 4);
}

TEST_CASE("degenerate pencil example d=2,n=3") {
    QConfig cfg = config_from_ints(2, 3, {{1, 0, 1}, {0, 1, -1}});
    CHECK(psi_direct(cfg, DegreeVector(2, {1, 1, 2})) == 1);
}

TEST_CASE("solution basis matches psi and annihilation") {
    QConfig cfg = config_from_ints(2, 2, {{1, 0}, {0, 1}});
    // l_2 = d/dz2 kills z1 only in degree 1
    auto sol = solution_basis(cfg, DegreeVector(1, {1, 0}));
    REQUIRE(sol.vectors.size() == 1);
    int idx = sol.monomials->index_of({1, 0});
    CHECK(sol.vectors[0][idx] != 0);
    int idx2 = sol.monomials->index_of({0, 1});
    CHECK(sol.vectors[0][idx2] == 0);
}

TEST_CASE("psi vanishes beyond the degree bound r > sum(u)") {
    std::mt19937_64 rng(9);
    QConfig cfg = random_generic_config(3, 5, rng);
    CHECK(psi_direct(cfg, DegreeVector(4, {1, 1, 1, 0, 0})) == 0);
    CHECK(psi_direct(cfg, DegreeVector(1, {0, 0, 0, 0, 0})) == 0);
}

TEST_CASE("psi is monotone in u componentwise") {
    std::mt19937_64 rng(31);
    QConfig cfg = random_generic_config(3, 5, rng);
    std::uniform_int_distribution<int> uv(0, 3);
    std::uniform_int_distribution<int> rv(0, 4);
    for (int it = 0; it < 25; ++it) {
        std::vector<int> u(5), w(5);
        for (int i = 0; i < 5; ++i) {
            u[i] = uv(rng);
            w[i] = u[i] + uv(rng) % 2;
        }
        int r = rv(rng);
        CHECK(psi_direct(cfg, DegreeVector(r, u)) <= psi_direct(cfg, DegreeVector(r, w)));
    }
}

TEST_CASE("cremona fixed point and involution") {
    DegreeVector anticanonical(3, {2, 2, 2, 2, 2, 2});
    CHECK(cremona(anticanonical, 3) == anticanonical);

    DegreeVector deg(2, {2, 2, 2, 0, 0});
    CHECK(cremona(deg, 3) == DegreeVector(4, {2, 2, 2, 2, 2}));

    DegreeVector big(5, {1, 2, 3, 4, 5, 6});
    CHECK(cremona(cremona(big, 3), 3) == big);
}

TEST_CASE("weyl orbit of a line class in the cubic surface has 27 elements") {
    WeylOrbit orbit = weyl_orbit(DegreeVector(0, {1, 0, 0, 0, 0, 0}), 3, 1000);
    CHECK_FALSE(orbit.truncated);
    CHECK(orbit.elements.size() == 27);
    // orbit of the fixed anticanonical degree is a singleton
    WeylOrbit fixed = weyl_orbit(DegreeVector(3, {2, 2, 2, 2, 2, 2}), 3, 1000);
    CHECK(fixed.elements.size() == 1);
}

TEST_CASE("cremona invariance of psi for generic configurations") {
    std::mt19937_64 rng(77);
    QConfig cfg = random_generic_config(3, 5, rng);
    std::uniform_int_distribution<int> uv(0, 3);
    std::uniform_int_distribution<int> rv(0, 5);
    int checked = 0;
    for (int it = 0; it < 200 && checked < 40; ++it) {
        std::vector<int> u(5);
        for (auto& x : u) x = uv(rng);
        DegreeVector deg(rv(rng), u);
        if (!cremona_defined(deg, 3)) continue;
        DegreeVector img = cremona(deg, 3);
        if (img == deg) continue;
        CHECK(psi_direct(cfg, deg) == psi_direct(cfg, img));
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("varphi quasi-polynomial for three binary forms") {
    QConfig cfg = config_from_ints(2, 3, {{1, 0, 1}, {0, 1, -1}});
    CHECK(varphi_uniform(cfg, 0) == 1);
    CHECK(varphi_uniform(cfg, 1) == 3);
    CHECK(varphi_uniform(cfg, 2) == 7);
    for (int j = 0; j <= 8; ++j) {
        long long expect = (j % 2 == 1) ? (3 * j * j + 6 * j + 3) / 4 : (3 * j * j + 6 * j + 4) / 4;
        CHECK(varphi_uniform(cfg, j) == expect);
    }
}
