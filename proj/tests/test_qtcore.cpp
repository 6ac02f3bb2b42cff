#include <random>

#include "doctest.h"
#include "qthook/coeff.hpp"
#include "qthook/partition.hpp"
#include "qthook/qt.hpp"

using namespace qthook;

namespace {

QTFactored F(int a, int b, int e = 1) { return QTFactored::factor(a, b, e); }

bool same(const QTFactored& x, const QTFactored& y) { return qtEquals(x, y, Mode::Exact); }

QTFactored randomQT(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(0, 3), expo(-2, 2), coeff(-5, 5);
    int c = coeff(rng);
    QTFactored x = QTFactored::monomial(c == 0 ? 1 : c, expo(rng), expo(rng));
    int nf = small(rng);
    for (int i = 0; i < nf; ++i) {
        int a = small(rng), b = small(rng);
        if (a == 0 && b == 0) a = 1;
        x *= F(a, b, expo(rng));
    }
    return x;
}

}  // namespace

TEST_CASE("partition basics") {
    Partition p = Partition::parse("4,3,1");
    CHECK(p.length() == 3);
    CHECK(p.weight() == 8);
    CHECK(p.conjugate() == Partition{3, 2, 2, 1});
    CHECK(p.conjugate().conjugate() == p);
    CHECK(p.oddRows() == 2);
    CHECK(p.oddColumns() == Partition{3, 2, 2, 1}.oddRows());
    CHECK(Partition::parse("").empty());
    CHECK(p.part(7) == 0);
    CHECK_THROWS(Partition::parse("1,2"));
    CHECK(Partition{3, 1}.isStrict());
    CHECK_FALSE(Partition{2, 2}.isStrict());
    CHECK(partitionsOf(5).size() == 7);
    CHECK(strictPartitionsOf(6).size() == 4);
    CHECK(isHorizontalStrip({3, 1}, {2}));
    CHECK(isHorizontalStrip({2, 2}, {2}));
    CHECK_FALSE(isHorizontalStrip({2, 2}, {1}));
}

TEST_CASE("horizontal strip enumeration agrees with the interlacing test") {
    for (const auto& mu : partitionsUpTo(4))
        for (int r = 0; r <= 3; ++r) {
            auto lams = addHorizontalStrip(mu, r);
            for (const auto& lam : partitionsOf(mu.weight() + r)) {
                bool listed = std::find(lams.begin(), lams.end(), lam) != lams.end();
                CHECK(listed == isHorizontalStrip(lam, mu));
            }
            for (const auto& lam : lams) {
                auto back = removeHorizontalStrip(lam, r);
                CHECK(std::find(back.begin(), back.end(), mu) != back.end());
            }
        }
}

TEST_CASE("BiPoly arithmetic and binomial division") {
    BiPoly a = BiPoly::binomial(2, 0);
    BiPoly quotient;
    REQUIRE(a.divideByBinomial(1, 0, quotient));
    CHECK(quotient == BiPoly(1) + BiPoly::monomial(1, 1, 0));
    BiPoly p = BiPoly::binomial(1, 2) * BiPoly::binomial(3, 1) + BiPoly::monomial(2, -1, 0) * BiPoly::binomial(1, 2);
    REQUIRE(p.divideByBinomial(1, 2, quotient));
    CHECK(quotient * BiPoly::binomial(1, 2) == p);
    CHECK_FALSE(BiPoly::binomial(1, 1).divideByBinomial(1, 0, quotient));
    CHECK(BiPoly::binomial(1, 2).toString() == "1 - q*t^2");
}

TEST_CASE("fFun examples and recurrence") {
    CHECK(same(fFun(0, 3), 1));
    CHECK(fFun(-2, 1).isZero());
    CHECK(same(fFun(1, 0), F(0, 1) / F(1, 0)));
    CHECK(same(fSeriesCoeff(2), F(0, 1) * F(1, 1) / (F(1, 0) * F(2, 0))));
    for (int n = 1; n <= 8; ++n)
        for (int m = 0; m <= 4; ++m)
            CHECK(same(fFun(n, m), fFun(n - 1, m) * F(n - 1, m + 1) / F(n, m)));
}

TEST_CASE("b functions") {
    CHECK(same(bLambda({}), 1));
    CHECK(same(bLambda({1}), F(0, 1) / F(1, 0)));
    CHECK(same(bLambda({2, 1}), F(1, 2) * F(0, 1, 2) / (F(2, 1) * F(1, 0, 2))));
    CHECK(same(bEl({1, 1}), F(0, 1) / F(1, 0)));
    CHECK(same(bEl({}), 1));
    CHECK(same(bOa({}), 1));
    for (int k = 1; k <= 5; ++k) CHECK(same(bEl(Partition{k}), bLambda(Partition{k})));
    for (const auto& lam : partitionsUpTo(6)) {
        CHECK(same(bLambda(lam), bLambdaFProduct(lam)));
        CHECK(same(bEl(lam), bElFProduct(lam)));
        CHECK(same(bLambda(lam), bEl(lam) * bOddLeg(lam)));
    }
}

TEST_CASE("Pieri coefficients: phi/psi equals the b ratio on horizontal strips") {
    CHECK(same(phiSkew({1}, {}), F(0, 1) / F(1, 0)));
    for (const auto& lam : partitionsUpTo(5)) {
        CHECK(same(psiSkew(lam, lam), 1));
        for (const auto& mu : removeAnyHorizontalStrip(lam)) {
            auto phi = phiSkew(lam, mu), psi = psiSkew(lam, mu);
            REQUIRE_FALSE(psi.isZero());
            CHECK(same(phi / psi, bLambda(lam) / bLambda(mu)));
        }
    }
    CHECK(phiSkew({2, 2}, {1}).isZero());
    CHECK(psiSkew({2, 2}, {1}).isZero());
}

TEST_CASE("qtEquals: exact and eval modes agree on random pairs") {
    std::mt19937_64 rng(2024);
    auto points = samplePoints(99, 5);
    REQUIRE(points.size() == 5);
    int equalPairs = 0;
    for (int i = 0; i < 100; ++i) {
        QTFactored x = randomQT(rng);
        // Every third pair is equal.
        QTFactored y = randomQT(rng);
        if (i % 3 == 0) y = x * F(3, 1) / F(3, 1);
        bool exact = qtEquals(x, y, Mode::Exact);
        bool eval = qtEquals(x, y, Mode::Eval, points);
        CHECK(exact == eval);
        equalPairs += exact;
    }
    CHECK(equalPairs >= 34);
    // (1 - q^2)/(1 - q) = 1 + q is not 1.
    CHECK_FALSE(qtEquals(F(2, 0) / F(1, 0), 1, Mode::Exact));
}

TEST_CASE("sample points are independent and deterministic") {
    auto a = samplePoints(5, 4), b = samplePoints(5, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].q0 == b[i].q0);
        CHECK(a[i].t0 == b[i].t0);
        CHECK(a[i].q0 != a[i].t0);
    }
}

TEST_CASE("RatQT arithmetic matches QTFactored") {
    RatQT a(F(0, 1) / F(1, 0)), b(F(1, 1) / F(2, 0));
    RatQT s = a + b;
    auto p = samplePoints(3, 2);
    for (const auto& pt : p) {
        CHECK(s.evaluate(pt) == evaluate(F(0, 1) / F(1, 0), pt) + evaluate(F(1, 1) / F(2, 0), pt));
        CHECK((a * b).evaluate(pt) == evaluate(F(0, 1) * F(1, 1) / (F(1, 0) * F(2, 0)), pt));
    }
    CHECK((s - s).isZero());
    CHECK(RatQT(F(2, 0) / F(1, 0)) == RatQT(BiPoly(1) + BiPoly::monomial(1, 1, 0), {}));
}
