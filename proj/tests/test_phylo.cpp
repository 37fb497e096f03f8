#include <random>

#include "cnr/phylo.hpp"
#include "cnr/presets.hpp"
#include "doctest.h"

using namespace cnr;

namespace {

TrivalentTree snowflake6() {
    return TrivalentTree::from_splits(
        6, {{{1, 2}, {3, 4, 5, 6}}, {{3, 4}, {1, 2, 5, 6}}, {{5, 6}, {1, 2, 3, 4}}});
}

}  // namespace

TEST_CASE("tree construction and validation") {
    TrivalentTree quartet = TrivalentTree::from_splits(4, {{{1, 2}, {3, 4}}});
    CHECK(quartet.clusters.size() == 1);
    TrivalentTree cat5 = TrivalentTree::caterpillar(5);
    CHECK(cat5.splits().size() == 2);
    CHECK(cat5.has_split(0b00011));
    CHECK(cat5.has_split(0b00111));
    CHECK_NOTHROW(snowflake6());
    CHECK_THROWS_AS(TrivalentTree::from_splits(
                        5, {{{1, 2}, {3, 4, 5}}, {{2, 3}, {1, 4, 5}}}),
                    IncompatibleSplits);
    CHECK_THROWS_AS(TrivalentTree::from_splits(4, {{{1}, {2, 3, 4}}}), IncompatibleSplits);
}

TEST_CASE("decoration counts: quartet and quintet anchors") {
    CHECK(decoration_count(TrivalentTree::caterpillar(4), DegreeVector(1, {1, 1, 1, 1})) == 2);
    CHECK(decoration_count(TrivalentTree::caterpillar(5), DegreeVector(2, {1, 1, 1, 1, 1})) == 1);
    CHECK(decoration_count(TrivalentTree::caterpillar(7),
                           DegreeVector(3, {1, 1, 1, 1, 1, 1, 1})) == 1);
    CHECK(decoration_count(TrivalentTree::caterpillar(6),
                           DegreeVector(2, {1, 1, 1, 1, 1, 1})) == 4);  // 2^k at k=2
    // r = 0: one decoration whenever the half-weights are integral
    CHECK(decoration_count(TrivalentTree::caterpillar(4), DegreeVector(0, {2, 0, 0, 0})) == 1);
}

TEST_CASE("decoration counts equal the oracle for generic n=d+2 points") {
    std::mt19937_64 rng(41);
    for (int n : {4, 5, 6}) {
        QConfig cfg = random_generic_config(n - 2, n, rng);
        TrivalentTree tree = TrivalentTree::caterpillar(n);
        std::uniform_int_distribution<int> uv(0, 3);
        std::uniform_int_distribution<int> rv(0, 3);
        for (int it = 0; it < 40; ++it) {
            std::vector<int> u(n);
            for (auto& x : u) x = uv(rng);
            DegreeVector deg(rv(rng), u);
            CHECK(decoration_count(tree, deg) == psi_direct(cfg, deg));
        }
    }
}

TEST_CASE("tree independence of the decoration count") {
    TrivalentTree cat = TrivalentTree::caterpillar(6);
    TrivalentTree snow = snowflake6();
    TrivalentTree mixed = TrivalentTree::from_splits(
        6, {{{1, 3}, {2, 4, 5, 6}}, {{1, 3, 5}, {2, 4, 6}}, {{1, 3, 5, 2}, {4, 6}}});
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> uv(0, 3);
    std::uniform_int_distribution<int> rv(0, 4);
    for (int it = 0; it < 200; ++it) {
        std::vector<int> u(6);
        for (auto& x : u) x = uv(rng);
        DegreeVector deg(rv(rng), u);
        long long c = decoration_count(cat, deg);
        CHECK(c == decoration_count(snow, deg));
        CHECK(c == decoration_count(mixed, deg));
    }
}

TEST_CASE("verlinde anchors and parity") {
    CHECK(verlinde(2, BigRational(1)) == 3);
    CHECK(verlinde(2, BigRational(0)) == 1);
    CHECK(verlinde(2, BigRational(1, 2)) == 2);  // 2^k with k=1
    CHECK(verlinde(4, BigRational(1, 2)) == 4);
    CHECK(verlinde(6, BigRational(1, 2)) == 8);
    CHECK_THROWS_AS(verlinde(3, BigRational(1, 2)), ParityViolation);
}

TEST_CASE("verlinde equals decoration count of the anticanonical degrees") {
    for (int d = 2; d <= 6; ++d) {
        TrivalentTree tree = TrivalentTree::caterpillar(d + 2);
        for (int twol = 1; twol <= 4; ++twol) {
            if (twol % 2 == 1 && d % 2 == 1) continue;
            BigRational l(twol, 2);
            l.canonicalize();
            BigRational r_exact = BigRational(d) * l;
            REQUIRE(r_exact.get_den() == 1);
            DegreeVector deg(static_cast<int>(r_exact.get_num().get_si()),
                             std::vector<int>(d + 2, twol));
            CHECK(verlinde(d, l) == decoration_count(tree, deg));
        }
    }
}

TEST_CASE("flattening matrices of the quartet split") {
    TrivalentTree quartet = TrivalentTree::from_splits(4, {{{1, 2}, {3, 4}}});
    FlatteningPair fp = flattening_matrices(quartet, 0b0011);
    CHECK(fp.m_ab.size() == 2);
    CHECK(fp.m_ab[0].size() == 2);
    // rows: even subsets of {1,2} = {}, {1,2}; cols: odd subsets of {3,4}
    CHECK(fp.m_ab[0][0] == 0b0100u);  // q_3
    CHECK(fp.m_ab[0][1] == 0b1000u);  // q_4
    CHECK(fp.m_ab[1][0] == 0b0111u);  // q_123
    CHECK(fp.m_ab[1][1] == 0b1011u);  // q_124
    CHECK_THROWS_AS(flattening_matrices(quartet, 0b0101), SplitNotInTree);
}

TEST_CASE("caterpillar matrix realizes the caterpillar tree and not the snowflake") {
    for (int n : {5, 6}) {
        TMatrix B = presets::caterpillar_matrix(n);
        CHECK(verify_tree_realization(TrivalentTree::caterpillar(n), B));
    }
    CHECK_FALSE(verify_tree_realization(snowflake6(), presets::caterpillar_matrix(6)));
}

TEST_CASE("q-monomial dimension count of Lemma-type degrees") {
    // u with 2k+2 ones, j twos: dim Q[q]_(j+k,u) = 2^(2k)
    for (int n : {4, 5, 6}) {
        for (int k = 0; 2 * k + 2 <= n; ++k) {
            for (int j = 0; j + 2 * k + 2 <= n; ++j) {
                std::vector<int> u(n, 0);
                for (int i = 0; i < 2 * k + 2; ++i) u[i] = 1;
                for (int i = 0; i < j; ++i) u[2 * k + 2 + i] = 2;
                DegreeVector deg(j + k, u);
                CHECK(q_monomial_count_deg2(n, deg) == (1LL << (2 * k)));
            }
        }
    }
}
