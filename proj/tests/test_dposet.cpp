#include <doctest.h>

#include <algorithm>
#include <set>

#include "qthook/dposet.hpp"

using namespace qthook;

namespace {

std::string hookAt(const ColoredPoset& P, const std::vector<Exps>& h, Coord c) {
    return P.vars()->format(h[P.index(c)]);
}

bool hasInterval(const ColoredPoset& P, Coord top, Coord bottom, int k) {
    auto ivs = findDkIntervals(P);
    return std::any_of(ivs.begin(), ivs.end(), [&](const DkInterval& I) {
        return I.k == k && P.coord(I.top) == top && P.coord(I.bottom) == bottom;
    });
}

std::vector<ColoredPoset> catalogue() {
    std::vector<ColoredPoset> out;
    for (auto a : {Partition{1}, Partition{2, 1}, Partition{3, 1}, Partition{3, 2}, Partition{4, 2, 1},
                   Partition{8, 5, 2, 1}})
        out.push_back(buildShifted(a));
    out.push_back(buildBird({4, 3}, {3, 2}, 2));
    out.push_back(buildBird({2, 1}, {2, 1}, 1));
    out.push_back(buildBird({3, 1}, {4, 2}, 3));
    out.push_back(buildBanner({4, 3, 2, 1}, 2));
    out.push_back(buildBanner({9, 6, 3, 2}, 2));
    out.push_back(buildBanner({5, 3, 2, 1}, 3));
    return out;
}

}  // namespace

TEST_CASE("color names") {
    CHECK(Color{3, false}.name() == "z3");
    CHECK(Color{-2, false}.name() == "zm2");
    CHECK(Color{1, true}.name() == "z1p");
    CHECK(Color{0, true}.name() == "z0p");
}

TEST_CASE("shifted (1) and (2,1)") {
    auto P1 = buildShifted({1});
    CHECK(P1.size() == 1);
    CHECK(P1.color(0).name() == "z0");
    CHECK(hookMonomials(P1)[0] == Exps{1});

    auto P = buildShifted({2, 1});
    REQUIRE(P.size() == 3);
    int a = P.index({1, 1}), b = P.index({1, 2}), c = P.index({2, 2});
    CHECK(P.less(b, a));
    CHECK(P.less(c, b));
    CHECK(P.color(a).name() == "z0");
    CHECK(P.color(b).name() == "z1");
    CHECK(P.color(c).name() == "z0p");
    CHECK(P.depth(a) == 0);
    CHECK(P.depth(c) == 2);
    CHECK(findDkIntervals(P).empty());
    CHECK(dCompleteCheck(P).pass);
    auto h = hookMonomials(P);
    CHECK(hookAt(P, h, {2, 2}) == "z0p");
    CHECK(hookAt(P, h, {1, 2}) == "z0p*z1");
    CHECK(hookAt(P, h, {1, 1}) == "z0*z0p*z1");
    CHECK_THROWS(buildShifted({2, 2}));
}

TEST_CASE("shifted (3,2) has the expected d3-interval") {
    auto P = buildShifted({3, 2});
    auto ivs = findDkIntervals(P);
    REQUIRE(ivs.size() == 1);
    CHECK(P.coord(ivs[0].top) == Coord{1, 2});
    CHECK(P.coord(ivs[0].bottom) == Coord{2, 3});
    std::set<Coord> sides{P.coord(ivs[0].sideA), P.coord(ivs[0].sideB)};
    CHECK(sides == std::set<Coord>{{1, 3}, {2, 2}});
}

TEST_CASE("shifted (8,5,2,1) has 16 cells") { CHECK(buildShifted({8, 5, 2, 1}).size() == 16); }

TEST_CASE("bird ((4,3),(3,2),2)") {
    auto P = buildBird({4, 3}, {3, 2}, 2);
    CHECK(P.size() == 14);
    REQUIRE(P.top());
    CHECK(P.coord(*P.top()) == Coord{1, -1});
    CHECK(P.depth(*P.top()) == 0);
    CHECK(hasInterval(P, {1, 1}, {2, 2}, 3));
    auto shape = P.topTreeShape();
    REQUIRE(shape);
    CHECK(*shape == TreeShape{2, 2, 3});
    CHECK(P.color(P.index({3, 1})).name() == "z2p");
    CHECK(P.color(P.index({1, -1})).name() == "zm2");
    CHECK(P.color(P.index({4, 4})).name() == "zm2");
    auto h = hookMonomials(P);
    CHECK(hookAt(P, h, {3, 3}) == "zm2*zm1");
    CHECK(hookAt(P, h, {2, 2}) == "zm2*zm1*z0*z1*z1p*z2");
}

TEST_CASE("banner ((9,6,3,2),2) and ((4,3,2,1),2)") {
    auto P = buildBanner({9, 6, 3, 2}, 2);
    CHECK(P.size() == 22);
    CHECK(P.color(P.index({2, 2})).name() == "z0p");
    CHECK(P.color(P.index({3, 3})).name() == "z0");
    CHECK(buildBanner({4, 3, 2, 1}, 2).size() == 12);
    auto shape = P.topTreeShape();
    REQUIRE(shape);
    // The branch sits at (1,2): f elements above, (2,2) and the rest of row 1 below.
    CHECK(*shape == TreeShape{2, 1, 7});
    CHECK_THROWS(buildBanner({4, 3, 2}, 2));
    CHECK_THROWS(buildBanner({4, 3, 2, 1}, 1));
}

TEST_CASE("shifted top tree") {
    auto shape = buildShifted({5, 3, 1}).topTreeShape();
    REQUIRE(shape);
    CHECK(*shape == TreeShape{1, 1, 3});
}

TEST_CASE("catalogue: structure, coloring and hooks") {
    for (const auto& P : catalogue()) {
        CAPTURE(toJson(P).dump());
        CHECK(P.top());
        CHECK(P.hasRank());
        CHECK(dCompleteCheck(P).pass);
        CHECK(coloringCheck(P).pass);
        auto rep = hookAgreementCheck(P);
        CAPTURE(rep.toJson().dump());
        CHECK(rep.pass);
        CHECK(static_cast<int>(hookMonomialsClosedForm(P).size()) == P.size());
        for (const auto& h : hookMonomials(P)) {
            CHECK(nonnegative(h));
            CHECK(totalDegree(h) >= 1);
        }
        for (const auto& I : findDkIntervals(P)) CHECK(P.colorIndex(I.top) == P.colorIndex(I.bottom));
    }
}

TEST_CASE("custom posets and d-completeness failures") {
    // Two maximal elements over a common bottom: a d3^- with no completion.
    ColoredPoset V({}, {{0, 0}, {0, 1}, {1, 0}}, {{0, false}, {1, false}, {2, false}}, {{0, 1}, {0, 2}});
    auto rep = dCompleteCheck(V);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.mismatch);
    CHECK(rep.mismatch->monomial == "D1");

    // Diamond with an extra element below the top but outside the interval violates D2.
    ColoredPoset D({},
                   {{0, 0}, {1, 0}, {1, 1}, {2, 0}, {1, 2}},
                   {{0, false}, {1, false}, {2, false}, {0, false}, {3, false}},
                   {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {4, 3}});
    auto rd = dCompleteCheck(D);
    CHECK_FALSE(rd.pass);
    CHECK(rd.mismatch->monomial == "D2");

    // Same-colored incomparable pair.
    ColoredPoset bad({}, {{0, 0}, {0, 1}, {1, 1}}, {{0, false}, {1, false}, {1, false}}, {{1, 0}, {2, 0}});
    CHECK_FALSE(coloringCheck(bad).pass);
    CHECK_THROWS(hookMonomialsClosedForm(bad));
    CHECK_THROWS(ColoredPoset({}, {{0, 0}, {0, 1}}, {{0, false}, {1, false}}, {{0, 1}, {1, 0}}));
}

TEST_CASE("P-partition enumeration") {
    ColoredPoset one({}, {{0, 0}}, {{0, false}}, {});
    CHECK(enumeratePPartitions(one, 2).size() == 3);
    ColoredPoset anti({}, {{0, 0}, {0, 1}}, {{0, false}, {1, false}}, {});
    CHECK(enumeratePPartitions(anti, 2).size() == 6);
    auto P = buildShifted({2, 1});
    CHECK(enumeratePPartitions(P, 2).size() == 4);

    // Brute force on a bird: every map counted once and order-reversing.
    auto B = buildBird({2, 1}, {2, 1}, 1);
    auto all = enumeratePPartitions(B, 4);
    std::set<PPartition> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (const auto& pi : all) {
        CHECK(isPPartition(B, pi));
        int s = 0;
        for (int v : pi) s += v;
        CHECK(s <= 4);
    }
    long brute = 0;
    std::vector<int> pi(B.size(), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == B.size()) {
            if (isPPartition(B, pi)) ++brute;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            pi[pos] = v;
            self(self, pos + 1, left - v);
        }
        pi[pos] = 0;
    };
    rec(rec, 0, 4);
    CHECK(brute == static_cast<long>(all.size()));
    CHECK(enumeratePPartitions(B, 4) == all);
}

TEST_CASE("DOT and JSON dumps") {
    auto P = buildShifted({2, 1});
    auto dot = toDot(P);
    CHECK(dot.find("\"(1,2):z1\"") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
    auto j = toJson(P);
    CHECK(j["elements"].size() == 3);
    CHECK(j["hooksAgree"] == true);
    CHECK(j["covers"].size() == 2);
}
