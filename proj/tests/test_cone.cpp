#include <random>

#include "cnr/fiber.hpp"
#include "cnr/formulas.hpp"
#include "cnr/generators.hpp"
#include "cnr/presets.hpp"
#include "doctest.h"

using namespace cnr;

namespace {

std::vector<std::vector<BigInt>> int_vectors(const std::vector<std::vector<int>>& v) {
    std::vector<std::vector<BigInt>> out;
    for (const auto& row : v) out.emplace_back(row.begin(), row.end());
    return out;
}

std::vector<XYMonomial> type6_monomials() {
    std::vector<XYMonomial> out;
    for (const auto& s : presets::gr25_type_monomials()[5]) out.push_back(XYMonomial::parse(s, 5));
    return out;
}

}  // namespace

TEST_CASE("dd_facets on the octant and a simplicial cone") {
    PolyCone c = dd_facets(int_vectors({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(c.facets.size() == 3);
    auto f = f_vector(c);
    CHECK(f == std::vector<long long>{3, 3});
}

TEST_CASE("dd_facets detects low-dimensional cones") {
    CHECK_THROWS_AS(dd_facets(int_vectors({{1, 0, 0}, {0, 1, 0}})), ConeNotFullDim);
}

TEST_CASE("f_vector reports lineality") {
    // cone(x, -x, y) in R^2 has a lineality line
    PolyCone c;
    c.ambient_dim = 2;
    c.generators = int_vectors({{1, 0}, {-1, 0}, {0, 1}});
    CHECK_THROWS_AS(f_vector(c), NotPointed);
}

TEST_CASE("double description involution on random cones") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> val(-3, 3);
    int done = 0;
    while (done < 15) {
        std::vector<std::vector<BigInt>> gens(6, std::vector<BigInt>(4));
        // keep generators in an open halfspace so the cone is pointed
        for (auto& g : gens) {
            for (int j = 0; j < 3; ++j) g[j] = val(rng);
            g[3] = 1;
        }
        PolyCone cone;
        try {
            cone = dd_facets(gens);
        } catch (const ConeNotFullDim&) {
            continue;
        }
        auto rays = extreme_rays(cone);
        // recompute rays from the facets: dual of the dual description
        PolyCone dual = dd_facets(cone.facets);
        auto back = dual.facets;
        std::sort(back.begin(), back.end());
        CHECK(back == rays);
        ++done;
    }
}

TEST_CASE("Euler relation for f-vectors") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> val(-3, 3);
    int done = 0;
    while (done < 10) {
        std::vector<std::vector<BigInt>> gens(7, std::vector<BigInt>(4));
        for (auto& g : gens) {
            for (int j = 0; j < 3; ++j) g[j] = val(rng);
            g[3] = 1;
        }
        PolyCone cone;
        try {
            cone = dd_facets(gens);
        } catch (const ConeNotFullDim&) {
            continue;
        }
        auto f = f_vector(cone);
        // apex and full cone included: sum (-1)^i f_i = 0
        long long sum = 1;  // apex
        for (size_t i = 0; i < f.size(); ++i) sum += (i % 2 == 0 ? -1 : 1) * f[i];
        sum += (f.size() % 2 == 0 ? -1 : 1);  // full cone, dim = f.size()+1
        CHECK(sum == 0);
        ++done;
    }
}

TEST_CASE("type 6 cone: 12 facets and the printed f-vector") {
    auto monos = type6_monomials();
    // the paper's change of variables keeps (x, y) = (b_1, b_4)
    DegreeMap dm = degree_map_for(monos, 5, /*dependent_yvar=*/2);
    CHECK(dm.fiber_dim() == 2);
    PolyCone cone = initial_cone(monos, dm);
    CHECK(cone.ambient_dim == 8);
    CHECK(cone.facets.size() == 12);
    CHECK(f_vector(cone) == std::vector<long long>{16, 80, 180, 216, 148, 58, 12});
}

TEST_CASE("type 6 fiber counts match the five-point formula and the oracle") {
    auto monos = type6_monomials();
    DegreeMap dm = degree_map_for(monos, 5, 2);
    PolyCone cone = initial_cone(monos, dm);
    FiberCounter fc(cone, dm);

    std::mt19937_64 rng(123);
    QConfig cfg = random_generic_config(3, 5, rng);
    for (int r = 0; r <= 4; ++r)
        for (int u1 = 0; u1 <= 2; ++u1)
            for (int u2 = 0; u2 <= 2; ++u2)
                for (int u3 = 0; u3 <= 2; ++u3)
                    for (int u4 = 0; u4 <= 2; ++u4)
                        for (int u5 = 0; u5 <= 2; ++u5) {
                            DegreeVector deg(r, {u1, u2, u3, u4, u5});
                            long long via_cone = fc.count(deg);
                            CHECK(via_cone == psi_five_points(r, deg.u));
                            if ((r + u1 + u2) % 2 == 0)  // thin the oracle sweep
                                CHECK(via_cone == psi_direct(cfg, deg));
                        }
}

TEST_CASE("degree outside the support cone has empty fiber") {
    auto monos = type6_monomials();
    DegreeMap dm = degree_map_for(monos, 5, 2);
    PolyCone cone = initial_cone(monos, dm);
    CHECK(psi_via_cone(cone, dm, DegreeVector(3, {0, 0, 0, 0, 0})) == 0);
}

TEST_CASE("support cone of the five-point demicube") {
    TMatrix B = presets::caterpillar_matrix(5);
    GeneratorSet set = grassmann5_generators(B);
    std::vector<DegreeVector> degrees;
    for (const auto& g : set.gens) degrees.push_back(g.degree);
    PolyCone cone = support_cone(degrees);
    auto f = f_vector(cone);
    CHECK(f == std::vector<long long>{16, 80, 160, 120, 26});
}

TEST_CASE("support cone of n=d+1 degrees is the second hypersimplex") {
    const int n = 4;
    GeneratorSet set = minors_generators({TScalar::parse("t^6"), TScalar::parse("t^4"),
                                          TScalar::parse("t^2"), TScalar(1)});
    std::vector<DegreeVector> degrees;
    for (const auto& g : set.gens) degrees.push_back(g.degree);
    PolyCone cone = support_cone(degrees);
    // compare with the cone over the vertices e_i + e_j of Delta(n+1, 2)
    std::vector<std::vector<BigInt>> verts;
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<BigInt> v(n + 1, 0);
            v[i] = 1;
            v[j] = 1;
            verts.push_back(v);
        }
    CHECK(f_vector(cone) == f_vector(dd_facets(verts)));
}

TEST_CASE("single generator support cone is a ray") {
    PolyCone cone = support_cone({DegreeVector(1, {2})});
    CHECK(cone.generators.size() == 1);
    CHECK_THROWS_AS(dd_facets(cone.generators), ConeNotFullDim);
}
