#include <random>

#include "cnr/linalg.hpp"
#include "cnr/tscalar.hpp"
#include "doctest.h"

using namespace cnr;

namespace {

TScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, 4);
    auto poly = [&] {
        TPoly p;
        int d = deg(rng);
        for (int k = 0; k <= d; ++k) p += TPoly(BigRational(coef(rng)), k);
        return p;
    };
    TPoly num = poly();
    TPoly den;
    while (den.is_zero()) den = poly();
    return TScalar(num, den);
}

}  // namespace

TEST_CASE("order and initial coefficient of scalar literals") {
    CHECK(TScalar::parse("t^2-t^4").order() == 2);
    CHECK(TScalar::parse("1/t^3").order() == -3);
    CHECK(TScalar::parse("(t-t^5)/(t^2-t^4)").order() == -1);

    CHECK(TScalar::parse("t^2-t^4").initial_coefficient() == BigRational(1));
    CHECK(TScalar::parse("3/2").initial_coefficient() == BigRational(3, 2));
    CHECK(TScalar::parse("3t/2").initial_coefficient() == BigRational(3, 2));
    CHECK(TScalar::parse("(t-t^5)/(t^2-t^4)").initial_coefficient() == BigRational(1));

    CHECK_THROWS_AS(TScalar().order(), ZeroScalar);
}

TEST_CASE("scalar print/parse round trip") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        TScalar s = random_scalar(rng);
        TScalar back = TScalar::parse(s.str());
        CHECK(back == s);
    }
    CHECK(TScalar::parse("(t-t^5)/(t^2)").str() == "(1-t^4)/(t)");
    CHECK(TScalar::parse("t^2-t^4").str() == "t^2-t^4");
    CHECK(TScalar::parse("3/2").str() == "3/2");
    CHECK(TScalar::parse("0").str() == "0");
}

TEST_CASE("scalar field axioms on random values") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        TScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a * a.inverse() == TScalar(1));
    }
}

TEST_CASE("order and initial coefficient are multiplicative") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 100; ++it) {
        TScalar a = random_scalar(rng), b = random_scalar(rng);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).order() == a.order() + b.order());
        CHECK((a * b).initial_coefficient() == a.initial_coefficient() * b.initial_coefficient());
    }
}

TEST_CASE("polynomial gcd and exact division") {
    TPoly a = TPoly::parse("t^2-1");
    TPoly b = TPoly::parse("t^3-1");
    TPoly g = TPoly::gcd(a, b);
    CHECK(g == TPoly::parse("t-1"));
    CHECK(a.divexact(g) == TPoly::parse("t+1"));
}

TEST_CASE("kernel of rational matrices") {
    QMatrix id(2, 2);
    id.at(0, 0) = 1;
    id.at(1, 1) = 1;
    CHECK(kernel_basis(id).empty());

    QMatrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == 1);
    CHECK(k[0][1] == 1);
}

TEST_CASE("kernel exactness and rank-nullity on random matrices") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dim(1, 7);
    std::uniform_int_distribution<int> val(-6, 6);
    for (int it = 0; it < 120; ++it) {
        int rows = dim(rng), cols = dim(rng);
        QMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = BigRational(val(rng));
        auto basis = kernel_basis(m);
        int r = rank(m);
        CHECK(static_cast<int>(basis.size()) + r == cols);
        for (const auto& v : basis) {
            for (int i = 0; i < rows; ++i) {
                BigRational acc(0);
                for (int j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("kernel over Q(t) is exact") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> dim(1, 5);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> exp(0, 3);
    for (int it = 0; it < 40; ++it) {
        int rows = dim(rng), cols = dim(rng);
        TMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                m.at(i, j) = TScalar(TPoly(BigRational(val(rng)), exp(rng)));
        auto basis = kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) + rank(m) == cols);
        for (const auto& v : basis) {
            for (int i = 0; i < rows; ++i) {
                TScalar acc;
                for (int j = 0; j < cols; ++j) acc += m.at(i, j) * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}
