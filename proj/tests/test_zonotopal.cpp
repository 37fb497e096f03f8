#include "cnr/presets.hpp"
#include "cnr/zonotopal.hpp"
#include "doctest.h"

using namespace cnr;

namespace {

const ZonotopalConfig& zono_cfg() {
    static ZonotopalConfig cfg = arrangement_from_C(presets::zono_example_C());
    return cfg;
}

}  // namespace

TEST_CASE("arrangement_from_C reproduces the Cayley configuration") {
    const auto& cfg = zono_cfg();
    CHECK(cfg.n == 6);
    QConfig cayley = presets::cayley();
    // columns agree up to sign
    for (int j = 0; j < 6; ++j) {
        bool plus = true, minus = true;
        for (int i = 0; i < 3; ++i) {
            plus = plus && cfg.A.A.at(i, j) == cayley.A.at(i, j);
            minus = minus && cfg.A.A.at(i, j) == -cayley.A.at(i, j);
        }
        CHECK((plus || minus));
    }
}

TEST_CASE("identity matrix and d=2 arrangements") {
    QMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(arrangement_from_C(id).n == 3);

    QMatrix C2(2, 3);
    // columns (1,0), (0,1), (1,1): three distinct directions
    C2.at(0, 0) = 1;
    C2.at(1, 1) = 1;
    C2.at(0, 2) = 1;
    C2.at(1, 2) = 1;
    CHECK(arrangement_from_C(C2).n == 3);

    QMatrix bad(2, 2);
    bad.at(0, 0) = 1;
    bad.at(0, 1) = 2;
    CHECK_THROWS_AS(arrangement_from_C(bad), RankDeficient);
}

TEST_CASE("phi coefficients") {
    CHECK(phi_coeff({2, 2}, 1) == 2);
    CHECK(phi_coeff({}, 0) == 1);
    CHECK(phi_coeff({}, 3) == 0);
    for (int s = 0; s <= 4; ++s) CHECK(phi_coeff({4}, s) == (s <= 3 ? 1 : 0));
}

TEST_CASE("zonotopal psi agrees with the oracle pointwise") {
    const auto& cfg = zono_cfg();
    for (int v1 = 0; v1 <= 2; ++v1)
        for (int v2 = 0; v2 <= 2; ++v2)
            for (int v3 = 0; v3 <= 2; ++v3)
                for (int v4 = 0; v4 <= 2; ++v4) {
                    std::vector<int> v{v1, v2, v3, v4};
                    std::vector<int> u = cfg.u_of_v(v);
                    for (int r = 0; r <= 6; ++r)
                        CHECK(psi_zonotopal(cfg, r, v) ==
                              psi_direct(cfg.A, DegreeVector(r, u)));
                }
}

TEST_CASE("summed zonotopal psi matches the closed product") {
    const auto& cfg = zono_cfg();
    for (int v1 = 0; v1 <= 2; ++v1)
        for (int v2 = 0; v2 <= 2; ++v2)
            for (int v3 = 0; v3 <= 2; ++v3)
                for (int v4 = 0; v4 <= 2; ++v4) {
                    std::vector<int> v{v1, v2, v3, v4};
                    long long total = 0;
                    long long vsum = v1 + v2 + v3 + v4;
                    for (int r = 0; r <= vsum; ++r) total += psi_zonotopal(cfg, r, v);
                    long long expect =
                        (long long)(v1 + 1) * (v2 + 1) * (v3 + 1) * (v4 + 1) -
                        (long long)v1 * v2 * v3 * v4;
                    CHECK(total == expect);
                }
}

TEST_CASE("sum over r at v=1 counts the independent sets") {
    const auto& cfg = zono_cfg();
    std::vector<int> ones(4, 1);
    long long total = 0;
    for (int r = 0; r <= 4; ++r) total += psi_zonotopal(cfg, r, ones);
    // U_{3,4}: 1 + 4 + 6 + 4 independent sets
    CHECK(total == 15);
}

TEST_CASE("zonotopal generators match the displayed Z^G generators") {
    const auto& cfg = zono_cfg();
    GeneratorSet set = zonotopal_generators(cfg);
    REQUIRE(set.gens.size() == 8);
    // E monomials: x3x5x6, x2x4x6, x1x4x5, x1x2x3 in some order
    std::set<std::string> emonos;
    for (int k = 0; k < 4; ++k) emonos.insert(set.gens[k].poly.terms().begin()->first.str());
    CHECK(emonos == std::set<std::string>{"x1 x2 x3", "x1 x4 x5", "x2 x4 x6", "x3 x5 x6"});
    // F_k are Nagata invariant and live in degree (1, c_k)
    auto kernel = kernel_basis(cfg.A.A);
    std::vector<std::vector<TScalar>> basis;
    for (const auto& kv : kernel) {
        std::vector<TScalar> t(kv.size());
        for (size_t i = 0; i < kv.size(); ++i) t[i] = TScalar(kv[i]);
        basis.push_back(std::move(t));
    }
    for (int k = 0; k < 4; ++k) {
        const auto& E = set.gens[k];
        const auto& F = set.gens[4 + k];
        CHECK(nagata_invariance(F.poly, basis));
        CHECK(E.degree.r == 0);
        CHECK(F.degree.r == 1);
        CHECK(E.degree.u == F.degree.u);
        CHECK(F.poly.terms().size() == 3);
        // E_k * F_l is homogeneous of degree (1, c_k + c_l)
        XYPolynomial prod = E.poly * F.poly;
        CHECK(prod.is_homogeneous());
        CHECK(prod.degree().r == 1);
    }
}
