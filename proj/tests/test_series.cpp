#include "doctest.h"
#include "qthook/series.hpp"

using namespace qthook;

namespace {

QTFactored F(int a, int b, int e = 1) { return QTFactored::factor(a, b, e); }

}  // namespace

TEST_CASE("seriesF unrolls the q-binomial coefficients") {
    ExactRing R;
    auto vars = makeVarSet({"z0", "z1"});
    auto s = seriesF(R, vars, vars->unit("z0"), 2);
    CHECK(s.terms().size() == 3);
    CHECK(s.coefficient({1, 0}) == RatQT(F(0, 1) / F(1, 0)));
    CHECK(s.coefficient({2, 0}) == RatQT(fFun(2, 0)));
    auto s2 = seriesF(R, vars, Exps{1, 1}, 3);
    CHECK(s2.terms().size() == 2);
    CHECK_THROWS(seriesF(R, vars, Exps{0, 0}, 3));
    CHECK_THROWS(seriesF(R, vars, Exps{1, -1}, 3));
}

TEST_CASE("seriesF at t = q is the geometric series") {
    EvalRing R(EvalPoint{mpq_class(2, 3), mpq_class(2, 3)});
    auto vars = makeVarSet({"z0"});
    auto s = seriesF(R, vars, Exps{1}, 5);
    for (int k = 0; k <= 5; ++k) CHECK(s.coefficient({k}) == 1);
}

TEST_CASE("ring operations") {
    ExactRing R;
    auto vars = makeVarSet({"z0", "z1", "z2"});
    const int D = 4;
    auto a = seriesF(R, vars, Exps{1, 0, 0}, D);
    auto b = seriesF(R, vars, Exps{0, 1, 0}, D);
    auto c = seriesF(R, vars, Exps{0, 1, 1}, D) + seriesF(R, vars, Exps{2, 0, 0}, D).scaled(RatQT(F(1, 1)));
    auto one = MultiSeries<RatQT>::constant(vars, D, R.one());
    CHECK(seriesEquals(R, a * one, a).pass);
    CHECK((a - a).isZero());
    CHECK((a * b).coefficient({1, 1, 0}) == RatQT(fFun(1, 0) * fFun(1, 0)));
    CHECK(seriesEquals(R, (a * b) * c, a * (b * c)).pass);
    CHECK(seriesEquals(R, a * (b + c), a * b + a * c).pass);
    CHECK(seriesEquals(R, a * b, b * a).pass);
}

TEST_CASE("q-difference relation F(x) = (1 - tx)/(1 - x) F(qx)") {
    // (1 - x) F(x) = (1 - t x) F(qx), coefficientwise.
    ExactRing R;
    auto vars = makeVarSet({"x"});
    const int D = 6;
    auto f = seriesF(R, vars, Exps{1}, D);
    MultiSeries<RatQT> fq(vars, D);
    for (const auto& [e, c] : f.terms()) fq.add(e, c.times(QTFactored::monomial(1, e[0], 0)));
    MultiSeries<RatQT> oneMinusX(vars, D), oneMinusTX(vars, D);
    oneMinusX.add({0}, R.one());
    oneMinusX.add({1}, RatQT(mpq_class(-1)));
    oneMinusTX.add({0}, R.one());
    oneMinusTX.add({1}, RatQT(BiPoly::monomial(-1, 0, 1), {}));
    CHECK(seriesEquals(R, oneMinusX * f, oneMinusTX * fq).pass);
}

TEST_CASE("seriesEquals reports the first mismatch") {
    ExactRing R;
    auto vars = makeVarSet({"z0"});
    auto s = seriesF(R, vars, Exps{1}, 3);
    auto t = s;
    t.add({3}, R.one());
    t.add({2}, R.one());
    auto rep = seriesEquals(R, s, t);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.mismatch);
    CHECK(rep.mismatch->monomial == "z0^2");
    CHECK(seriesEquals(R, s, s).pass);
}

TEST_CASE("substituteMonomials") {
    ExactRing R;
    auto vars = makeVarSet({"z0", "z1"});
    Poly<RatQT> p;
    polyAdd(p, Exps{1, 0}, R.one());
    polyAdd(p, Exps{0, 1}, R.one());
    auto s = substituteMonomials(p, {Exps{1, 0}, Exps{0, 1}}, vars, 3);
    CHECK(s.terms().size() == 2);
    Poly<RatQT> sq;
    polyAdd(sq, Exps{2}, R.one());
    auto s2 = substituteMonomials(sq, {Exps{1, 1}}, vars, 4);
    CHECK(s2.coefficient({2, 2}) == R.one());
    CHECK_THROWS(substituteMonomials(sq, {Exps{1, -1}}, vars, 4));
    CHECK_THROWS(substituteMonomials(sq, {Exps{0, 0}}, vars, 4));
}

TEST_CASE("exact and eval computations commute") {
    ExactRing R;
    auto vars = makeVarSet({"a", "b"});
    auto points = samplePoints(11, 20);
    for (std::size_t i = 0; i < points.size(); ++i) {
        EvalRing E(points[i]);
        int k = static_cast<int>(i % 3) + 1;
        auto exact = seriesF(R, vars, Exps{k, 0}, 4) * seriesF(R, vars, Exps{1, 1}, 4) - seriesF(R, vars, Exps{0, 1}, 4);
        auto eval = seriesF(E, vars, Exps{k, 0}, 4) * seriesF(E, vars, Exps{1, 1}, 4) - seriesF(E, vars, Exps{0, 1}, 4);
        MultiSeries<mpq_class> projected(vars, 4);
        for (const auto& [e, c] : exact.terms()) projected.add(e, c.evaluate(points[i]));
        CHECK(seriesEquals(E, projected, eval).pass);
    }
}

TEST_CASE("series JSON dump") {
    ExactRing R;
    auto vars = makeVarSet({"z0"});
    auto j = seriesToJson(R, seriesF(R, vars, Exps{1}, 2));
    CHECK(j["truncation"] == 2);
    CHECK(j["terms"].size() == 3);
    CHECK(j["terms"][1]["num"] == "1 - t");
    CHECK(j["terms"][1]["den"] == "1 - q");
}
