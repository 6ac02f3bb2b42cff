#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qthook/coeff.hpp"
#include "qthook/dposet.hpp"
#include "qthook/macdonald.hpp"
#include "qthook/series.hpp"

namespace qthook {

// ---- generic weight ----------------------------------------------------------

// Pairs entering the weight, precomputed once per poset. A numerator pair with
// upper == -1 stands for the virtual top.
struct WeightPlan {
    struct Pair {
        int lower, upper, shift;
    };
    std::vector<Pair> numerator;
    std::vector<Pair> denominator;  // shift = e; contributes f(.;e) f(.;e-1)
};

WeightPlan makeWeightPlan(const ColoredPoset& P);
// corrupt = true shifts the second argument of one numerator factor by one
// (a negative control for the end-to-end identity).
QTFactored weightGeneric(const WeightPlan& plan, const PPartition& pi, bool corrupt = false);
QTFactored weightGeneric(const ColoredPoset& P, const PPartition& pi);

// ---- family forms --------------------------------------------------------------

// Values on a shifted diagram; cells outside the map read as 0.
using ShapeArray = std::map<Coord, int>;
int shapeValue(const ShapeArray& a, int i, int j);

QTFactored fND(const Partition& alpha, const ShapeArray& pi);
QTFactored fD(const Partition& alpha, const ShapeArray& pi);

// How the two middle numerator factors of Phi take their second argument.
// Verbatim: 0 as displayed. Corrected: the step index i, as the generic weight requires.
enum class PhiReading { Verbatim, Corrected };

// rho, theta are indexed by absolute position 0..n (entries below m unused).
void checkRhoTheta(int m, int n, const std::vector<int>& rho, const std::vector<int>& theta);
QTFactored phiCap(int m, int n, const std::vector<int>& rho, const std::vector<int>& theta,
                  PhiReading reading = PhiReading::Corrected);
QTFactored phiHat(int m, int n, const std::vector<int>& rho, const std::vector<int>& theta,
                  PhiReading reading = PhiReading::Corrected);
// Phi-hat together with prod_{i=m+1}^{n} xt_i^{rho_i+theta_i-rho_{i-1}-theta_{i-1}}; xt indexed 0..n.
std::pair<QTFactored, Exps> phiTilde(int m, int n, const std::vector<int>& rho, const std::vector<int>& theta,
                                     const std::vector<Exps>& xt, PhiReading reading = PhiReading::Corrected);

struct BirdView {
    ShapeArray sigma, tau;
    std::vector<int> rho, theta;  // 0..f
};
struct BannerView {
    ShapeArray sigma;
    std::vector<int> rho, theta;  // 1..f, entry 0 unused
};
ShapeArray shiftedView(const ColoredPoset& P, const PPartition& pi);
BirdView birdView(const ColoredPoset& P, const PPartition& pi);
BannerView bannerView(const ColoredPoset& P, const PPartition& pi);

QTFactored weightShifted(const Partition& alpha, const ShapeArray& pi);
QTFactored weightBird(const Partition& alpha, const Partition& beta, int f, const BirdView& v,
                      PhiReading reading = PhiReading::Corrected);
QTFactored weightBanner(const Partition& alpha, int f, const BannerView& v,
                        PhiReading reading = PhiReading::Corrected);
// Dispatches on the poset's family.
QTFactored weightFamily(const ColoredPoset& P, const PPartition& pi, PhiReading reading = PhiReading::Corrected);

// ---- traces ------------------------------------------------------------------------

// pi[k] for k = 0..n: the k-th diagonal of a shifted array, largest first.
std::vector<Partition> traces(const Partition& alpha, const ShapeArray& pi, int n);
// +1 where k is a part of alpha, -1 otherwise, k = 1..n.
std::vector<int> epsilon(const Partition& alpha, int n);
QTFactored psiEps(const std::vector<Partition>& chain, const std::vector<int>& eps);
QTFactored phiEps(const std::vector<Partition>& chain, const std::vector<int>& eps);

struct TraceWeight {
    QTFactored weight;
    Exps monomial;
};
// Horizon 0 picks the default (alpha_1, or beta_1 for the left wing of a bird).
TraceWeight weightViaTraces(const ColoredPoset& P, const PPartition& pi, int horizon = 0, int horizonLeft = 0);
// The second displayed form b^el/b * phi^eps of the shifted-shape weight.
QTFactored weightShiftedPhiForm(const Partition& alpha, const ShapeArray& pi, int horizon = 0);
// The diagonal-sum form of the w exponent for shifted shapes (the proof's form).
int shiftedWExponentDiagonal(const Partition& alpha, const ShapeArray& pi);

VerificationReport weightAgreementCheck(const ColoredPoset& P, int D, long maxCases = -1);

// ---- series identities -------------------------------------------------------------

template <class R>
MultiSeries<typename R::value_type> lhsSeries(const R& ring, const ColoredPoset& P, int D, bool corrupt = false) {
    using C = typename R::value_type;
    WeightPlan plan = makeWeightPlan(P);
    std::map<Exps, C> acc;
    forEachPPartition(P, D, [&](const PPartition& pi) {
        C c = ring.lift(weightGeneric(plan, pi, corrupt));
        polyAdd(acc, zMonomial(P, pi), c);
    });
    return MultiSeries<C>::fromPoly(P.vars(), D, acc);
}

template <class R>
MultiSeries<typename R::value_type> rhsSeries(const R& ring, const ColoredPoset& P, int D) {
    using C = typename R::value_type;
    auto s = MultiSeries<C>::constant(P.vars(), D, ring.one());
    for (const auto& h : hookMonomials(P)) s *= seriesF(ring, P.vars(), h, D);
    return s;
}

template <class R>
VerificationReport verifyOkadaWith(const R& ring, const ColoredPoset& P, int D, bool corrupt = false) {
    Stopwatch sw;
    VerificationReport rep = seriesEquals(ring, lhsSeries(ring, P, D, corrupt), rhsSeries(ring, P, D));
    rep.check = corrupt ? "okada-corrupted" : "okada";
    rep.family = familyName(P.params().family);
    rep.params = P.params().toJson();
    rep.elapsedMs = sw.ms();
    return rep;
}

VerificationReport verifyOkada(const ColoredPoset& P, int D, Mode mode, const std::vector<EvalPoint>& points,
                               bool corrupt = false);

namespace detail {

template <class C>
Poly<C> shiftPoly(const Poly<C>& p, const Exps& m) {
    Poly<C> out;
    for (const auto& [e, c] : p) out.emplace(addExps(e, m), c);
    return out;
}

template <class R>
Poly<typename R::value_type> scalePoly(const R& ring, const Poly<typename R::value_type>& p, const QTFactored& x) {
    Poly<typename R::value_type> out;
    if (x.isZero()) return out;
    for (const auto& [e, c] : p) polyAdd(out, e, ring.mulFactored(c, x));
    return out;
}

// prod F(zt_l / zt_c) over complement pairs of a in [n].
template <class R, class Alias>
MultiSeries<typename R::value_type> complementKernel(const R& ring, const ColoredPoset& P, const Partition& a, int n,
                                                     int D, Alias alias) {
    using C = typename R::value_type;
    auto s = MultiSeries<C>::constant(P.vars(), D, ring.one());
    for (auto [c, l] : HookAliases::complementPairs(a, n)) s *= seriesF(ring, P.vars(), subExps(alias(l), alias(c)), D);
    return s;
}

// Compositions of total into `parts` nonnegative parts.
std::vector<std::vector<int>> compositions(int total, int parts);

}  // namespace detail

// Left-hand side rewritten with Macdonald polynomials.
template <class R>
MultiSeries<typename R::value_type> lhsMacdonaldForm(Macdonald<R>& M, const ColoredPoset& P, int D) {
    using C = typename R::value_type;
    const R& ring = M.ring();
    const auto& pr = P.params();
    HookAliases A(P);
    const int width = P.vars()->size();
    const Partition& a = pr.alpha;
    MultiSeries<C> sum(P.vars(), D);
    if (pr.family == Family::Shifted) {
        int r = a.length();
        std::vector<Exps> images;
        for (int i = 1; i <= r; ++i) images.push_back(A.zt(a.part(i)));
        for (const auto& lam : partitionsUpTo(D, r)) {
            int wexp = (lam.weight() - lam.oddColumns()) / 2;
            auto p = substituteToPoly(M.P(lam, r), images, width);
            p = detail::scalePoly(ring, detail::shiftPoly(p, scaleExps(A.w(), wexp)), bEl(lam));
            addWithFloor(sum, p, lam.weight());
        }
        return detail::complementKernel(ring, P, a, a.part(1), D, [&](int i) { return A.zt(i); }) * sum;
    }
    if (pr.family == Family::Bird) {
        const Partition& b = pr.beta;
        int f = pr.f;
        std::vector<Exps> xt;
        for (int i = 0; i <= f; ++i) xt.push_back(A.xt(i));
        std::vector<Exps> pImages{addExps(xt[0], A.zt(a.part(1))), addExps(xt[0], A.zt(a.part(2)))};
        std::vector<Exps> qImages{A.yt(b.part(1)), A.yt(b.part(2))};
        // rho_f <= ... <= rho_0 <= theta_0 <= ... <= theta_f, sum <= D.
        std::vector<int> rho(f + 1), theta(f + 1);
        auto visit = [&](auto&& self, int idx, int used) -> void {
            // idx runs over the chain positions from rho_f up to theta_f.
            if (idx == 2 * f + 2) {
                auto [phi, mono] = phiTilde(0, f, rho, theta, xt);
                Partition lam({theta[0], rho[0]});
                auto p = polyMul(substituteToPoly(M.P(lam, 2), pImages, width),
                                 substituteToPoly(M.Q(lam, 2), qImages, width));
                p = detail::scalePoly(ring, detail::shiftPoly(p, mono), phi);
                addWithFloor(sum, p, used);
                return;
            }
            int lo;
            if (idx == 0)
                lo = 0;
            else if (idx <= f)
                lo = rho[f - idx + 1];
            else if (idx == f + 1)
                lo = rho[0];
            else
                lo = theta[idx - f - 2];
            // Every later position is at least v, so reserve for them.
            int remaining = 2 * f + 2 - idx;
            for (int v = lo; used + v * remaining <= D; ++v) {
                if (idx <= f)
                    rho[f - idx] = v;
                else
                    theta[idx - f - 1] = v;
                self(self, idx + 1, used + v);
            }
        };
        visit(visit, 0, 0);
        auto kernel = detail::complementKernel(ring, P, a, a.part(1), D, [&](int i) { return A.zt(i); }) *
                      detail::complementKernel(ring, P, b, b.part(1), D, [&](int i) { return A.yt(i); });
        return kernel * sum;
    }
    if (pr.family == Family::Banner) {
        int f = pr.f;
        std::vector<Exps> xt{P.vars()->one()};
        for (int i = 1; i <= f; ++i) xt.push_back(A.xt(i));
        std::vector<Exps> images;
        for (int i = 1; i <= 4; ++i) images.push_back(A.zt(a.part(i)));
        Exps xw = addExps(xt[2], A.w());
        for (const auto& lam : partitionsUpTo(D, 4)) {
            std::vector<int> rho(f + 1, 0), theta(f + 1, 0);
            rho[1] = lam.part(4);
            theta[1] = lam.part(2);
            // rho_f <= ... <= rho_2 <= rho_1 and theta_1 <= theta_2 <= ... <= theta_f.
            int base = lam.weight();
            auto visit = [&](auto&& self, int idx, int used) -> void {
                if (idx == 2 * (f - 1)) {
                    auto [phi, mono] = phiTilde(1, f, rho, theta, xt);
                    auto p = substituteToPoly(M.P(lam, 4), images, width);
                    p = detail::shiftPoly(p, addExps(mono, scaleExps(xw, lam.part(2) + lam.part(4))));
                    p = detail::scalePoly(ring, p, phi * bEl(lam));
                    addWithFloor(sum, p, used);
                    return;
                }
                if (idx < f - 1) {
                    int i = idx + 2;  // rho_i, descending, at most rho_{i-1}
                    for (int v = 0; v <= rho[i - 1] && used + v <= D; ++v) {
                        rho[i] = v;
                        self(self, idx + 1, used + v);
                    }
                } else {
                    int i = idx - (f - 1) + 2;  // theta_i, ascending from theta_{i-1}
                    int remaining = f - i + 1;
                    for (int v = theta[i - 1]; used + v * remaining <= D; ++v) {
                        theta[i] = v;
                        self(self, idx + 1, used + v);
                    }
                }
            };
            visit(visit, 0, base);
        }
        return detail::complementKernel(ring, P, a, a.part(1), D, [&](int i) { return A.zt(i); }) * sum;
    }
    throw std::invalid_argument("lhsMacdonaldForm: custom posets are not supported");
}

// Right-hand side rewritten with Macdonald polynomials.
template <class R>
MultiSeries<typename R::value_type> rhsMacdonaldForm(Macdonald<R>& M, const ColoredPoset& P, int D) {
    using C = typename R::value_type;
    const R& ring = M.ring();
    const auto& pr = P.params();
    HookAliases A(P);
    const int width = P.vars()->size();
    const Partition& a = pr.alpha;
    MultiSeries<C> sum(P.vars(), D);
    if (pr.family == Family::Bird) {
        const Partition& b = pr.beta;
        int f = pr.f;
        std::vector<Exps> pImages{addExps(A.xt(0), A.zt(a.part(1))), addExps(A.xt(0), A.zt(a.part(2)))};
        std::vector<Exps> qImages{A.yt(b.part(1)), A.yt(b.part(2))};
        for (const auto& lam : partitionsUpTo(D, 2)) {
            auto pq = polyMul(substituteToPoly(M.P(lam, 2), pImages, width),
                              substituteToPoly(M.Q(lam, 2), qImages, width));
            for (int l = 0; l <= lam.part(2); ++l) {
                Partition reduced({lam.part(1) - l, lam.part(2) - l});
                QTFactored ratio = bLambda(reduced) / bLambda(lam);
                for (const auto& ls : detail::compositions(l, f)) {
                    // k_1..k_f with sum k + |lam| <= D.
                    std::vector<int> k(f, 0);
                    auto visit = [&](auto&& self, int i, int used) -> void {
                        if (i == f) {
                            QTFactored c = ratio;
                            Exps mono = P.vars()->one();
                            for (int j = 0; j < f; ++j) {
                                c *= fFun(k[j], 0) * fFun(ls[j], 0);
                                mono = addExps(mono, scaleExps(A.xt(j + 1), k[j] - ls[j]));
                            }
                            addWithFloor(sum, detail::scalePoly(ring, detail::shiftPoly(pq, mono), c), used);
                            return;
                        }
                        for (int v = 0; used + v <= D; ++v) {
                            k[i] = v;
                            self(self, i + 1, used + v);
                        }
                    };
                    visit(visit, 0, lam.weight());
                }
            }
        }
        auto kernel = detail::complementKernel(ring, P, a, a.part(1), D, [&](int i) { return A.zt(i); }) *
                      detail::complementKernel(ring, P, b, b.part(1), D, [&](int i) { return A.yt(i); });
        return kernel * sum;
    }
    if (pr.family == Family::Banner) {
        int f = pr.f;
        std::vector<Exps> images;
        for (int i = 1; i <= 4; ++i) images.push_back(A.zt(a.part(i)));
        Exps xw = addExps(A.xt(2), A.w());
        for (const auto& lam : partitionsUpTo(D, 4)) {
            auto pl = substituteToPoly(M.P(lam, 4), images, width);
            pl = detail::shiftPoly(pl, scaleExps(xw, lam.part(2) + lam.part(4)));
            for (int l = 0; l <= lam.part(4); ++l) {
                std::vector<int> parts;
                for (int i = 1; i <= 4; ++i) parts.push_back(lam.part(i) - l);
                QTFactored bel = bEl(Partition(parts));
                for (const auto& ls : detail::compositions(l, f - 1)) {
                    std::vector<int> k(f - 1, 0);
                    auto visit = [&](auto&& self, int i, int used) -> void {
                        if (i == f - 1) {
                            QTFactored c = bel;
                            Exps mono = P.vars()->one();
                            for (int j = 0; j < f - 1; ++j) {
                                c *= fFun(k[j], 0) * fFun(ls[j], 0);
                                mono = addExps(mono, scaleExps(A.xt(j + 2), k[j] - ls[j]));
                            }
                            addWithFloor(sum, detail::scalePoly(ring, detail::shiftPoly(pl, mono), c), used);
                            return;
                        }
                        for (int v = 0; used + v <= D; ++v) {
                            k[i] = v;
                            self(self, i + 1, used + v);
                        }
                    };
                    visit(visit, 0, lam.weight());
                }
            }
        }
        return detail::complementKernel(ring, P, a, a.part(1), D, [&](int i) { return A.zt(i); }) * sum;
    }
    if (pr.family == Family::Shifted) {
        // The product form itself; the Macdonald route for shifted shapes is the left-hand side.
        return rhsSeries(ring, P, D);
    }
    throw std::invalid_argument("rhsMacdonaldForm: custom posets are not supported");
}

// Checks lhsMacdonaldForm = lhsSeries and rhsMacdonaldForm = rhsSeries.
template <class R>
VerificationReport macdonaldFormsCheck(Macdonald<R>& M, const ColoredPoset& P, int D) {
    Stopwatch sw;
    const R& ring = M.ring();
    VerificationReport rep;
    rep.check = "macdonald-forms";
    rep.family = familyName(P.params().family);
    rep.params = P.params().toJson();
    rep.degree = D;
    stampRing(ring, rep);
    auto lhs = lhsSeries(ring, P, D);
    auto sub = seriesEquals(ring, lhsMacdonaldForm(M, P, D), lhs);
    sub.check = "lhs-macdonald";
    rep.absorb(sub);
    if (P.params().family != Family::Shifted) {
        auto rsub = seriesEquals(ring, rhsMacdonaldForm(M, P, D), rhsSeries(ring, P, D));
        rsub.check = "rhs-macdonald";
        rep.absorb(rsub);
    } else {
        // The Macdonald left-hand side against the hook product closes the loop for shifted shapes.
        auto rsub = seriesEquals(ring, lhsMacdonaldForm(M, P, D), rhsSeries(ring, P, D));
        rsub.check = "lhs-macdonald-vs-product";
        rep.absorb(rsub);
    }
    rep.elapsedMs = sw.ms();
    return rep;
}

}  // namespace qthook
