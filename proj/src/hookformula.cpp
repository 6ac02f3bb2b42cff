#include "qthook/hookformula.hpp"

#include <stdexcept>

namespace qthook {

namespace {

QTFactored fArg(int n, int m) {
    if (n < 0) throw std::domain_error("weight factor with negative argument " + std::to_string(n));
    return fFun(n, m);
}

}  // namespace

WeightPlan makeWeightPlan(const ColoredPoset& P) {
    if (!P.top() || !P.hasRank()) throw std::invalid_argument("weight: poset needs a unique top and a rank");
    WeightPlan plan;
    for (int x = 0; x < P.size(); ++x)
        if (P.colorIndex(x) == P.topColor()) {
            int diff = P.depth(x) + 1;
            if (diff % 2 == 0) throw std::logic_error("weight: parity violation against the virtual top");
            plan.numerator.push_back({x, -1, (diff - 1) / 2});
        }
    // The pair at the top element comes first; corrupt mode perturbs it.
    std::stable_partition(plan.numerator.begin(), plan.numerator.end(),
                          [&](const WeightPlan::Pair& p) { return p.lower == *P.top(); });
    for (int x = 0; x < P.size(); ++x)
        for (int y = 0; y < P.size(); ++y) {
            if (!P.less(x, y)) continue;
            int diff = P.depth(x) - P.depth(y);
            int cx = P.colorIndex(x), cy = P.colorIndex(y);
            if (P.colorsAdjacent(cx, cy)) {
                if (diff % 2 == 0) throw std::logic_error("weight: parity violation at adjacent colors");
                plan.numerator.push_back({x, y, (diff - 1) / 2});
            } else if (cx == cy) {
                if (diff % 2 != 0) throw std::logic_error("weight: parity violation at equal colors");
                plan.denominator.push_back({x, y, diff / 2});
            }
        }
    return plan;
}

QTFactored weightGeneric(const WeightPlan& plan, const PPartition& pi, bool corrupt) {
    QTFactored w(1);
    bool first = true;
    for (const auto& p : plan.numerator) {
        int arg = pi[p.lower] - (p.upper < 0 ? 0 : pi[p.upper]);
        w *= fArg(arg, p.shift + (corrupt && first ? 1 : 0));
        first = false;
    }
    for (const auto& p : plan.denominator) {
        int arg = pi[p.lower] - pi[p.upper];
        w /= fArg(arg, p.shift) * fArg(arg, p.shift - 1);
    }
    return w;
}

QTFactored weightGeneric(const ColoredPoset& P, const PPartition& pi) {
    if (!isPPartition(P, pi)) throw std::invalid_argument("weightGeneric: not a P-partition");
    return weightGeneric(makeWeightPlan(P), pi);
}

int shapeValue(const ShapeArray& a, int i, int j) {
    auto it = a.find({i, j});
    return it == a.end() ? 0 : it->second;
}

namespace {

bool inShifted(const Partition& alpha, int i, int j) {
    return i >= 1 && i <= alpha.length() && j >= i && j <= alpha.part(i) + i - 1;
}

}  // namespace

QTFactored fND(const Partition& alpha, const ShapeArray& pi) {
    QTFactored out(1);
    for (int i = 1; i <= alpha.length(); ++i)
        for (int j = i + 1; j <= alpha.part(i) + i - 1; ++j) {
            int v = shapeValue(pi, i, j);
            auto at = [&](int a, int b) { return v - shapeValue(pi, a, b); };
            for (int m = 0; m <= i + j + 1; ++m) {
                out *= fArg(at(i - m, j - m - 1), m) * fArg(at(i - m - 1, j - m), m);
                out /= fArg(at(i - m, j - m), m) * fArg(at(i - m - 1, j - m - 1), m);
            }
        }
    return out;
}

QTFactored fD(const Partition& alpha, const ShapeArray& pi) {
    QTFactored out(1);
    for (int i = 1; i <= alpha.length(); ++i) {
        int v = shapeValue(pi, i, i);
        auto at = [&](int a, int b) { return v - shapeValue(pi, a, b); };
        for (int m = 0; m <= 2 * i + 2; m += 2) {
            out *= fArg(at(i - m - 1, i - m), m) * fArg(at(i - m - 2, i - m - 1), m + 1);
            out /= fArg(at(i - m, i - m), m) * fArg(at(i - m - 2, i - m - 2), m + 1);
        }
    }
    return out;
}

void checkRhoTheta(int m, int n, const std::vector<int>& rho, const std::vector<int>& theta) {
    if (m > n || static_cast<int>(rho.size()) <= n || static_cast<int>(theta.size()) <= n)
        throw std::invalid_argument("rho/theta: index range");
    bool ok = rho[n] >= 0 && rho[m] <= theta[m];
    for (int i = m + 1; i <= n; ++i) ok = ok && rho[i] <= rho[i - 1] && theta[i - 1] <= theta[i];
    if (!ok) throw std::invalid_argument("rho/theta violate the chain condition");
}

QTFactored phiCap(int m, int n, const std::vector<int>& rho, const std::vector<int>& theta, PhiReading reading) {
    checkRhoTheta(m, n, rho, theta);
    QTFactored out(1);
    for (int i = m + 1; i <= n; ++i) {
        int s = reading == PhiReading::Corrected ? i : 0;
        out *= fArg(rho[i - 1] - rho[i], 0) * fArg(theta[i - 1] - rho[i], s) * fArg(theta[i] - rho[i - 1], s) *
               fArg(theta[i] - theta[i - 1], 0);
        out /= fArg(theta[i] - rho[i], i) * fArg(theta[i] - rho[i], i + 1);
    }
    return out;
}

QTFactored phiHat(int m, int n, const std::vector<int>& rho, const std::vector<int>& theta, PhiReading reading) {
    QTFactored boundary = fArg(rho[n], 0) * fArg(theta[n], n + 1) / (fArg(rho[m], 0) * fArg(theta[m], m + 1));
    return boundary * phiCap(m, n, rho, theta, reading);
}

std::pair<QTFactored, Exps> phiTilde(int m, int n, const std::vector<int>& rho, const std::vector<int>& theta,
                                     const std::vector<Exps>& xt, PhiReading reading) {
    QTFactored w = phiHat(m, n, rho, theta, reading);
    Exps mono(xt.at(n).size(), 0);
    for (int i = m + 1; i <= n; ++i) {
        int k = rho[i] + theta[i] - rho[i - 1] - theta[i - 1];
        if (k != 0) mono = addExps(mono, scaleExps(xt.at(i), k));
    }
    return {w, mono};
}

ShapeArray shiftedView(const ColoredPoset& P, const PPartition& pi) {
    ShapeArray a;
    for (int x = 0; x < P.size(); ++x) a[P.coord(x)] = pi[x];
    return a;
}

BirdView birdView(const ColoredPoset& P, const PPartition& pi) {
    const auto& pr = P.params();
    if (pr.family != Family::Bird) throw std::invalid_argument("birdView: not a bird");
    BirdView v;
    for (int i = 1; i <= 2; ++i)
        for (int j = i; j <= pr.alpha.part(i) + i - 1; ++j) v.sigma[{i, j}] = pi[P.index({i, j})];
    for (int a = 1; a <= 2; ++a)
        for (int b = a; b <= pr.beta.part(a) + a - 1; ++b) v.tau[{a, b}] = pi[P.index({b, a})];
    v.rho.resize(pr.f + 1);
    v.theta.resize(pr.f + 1);
    for (int k = 0; k <= pr.f; ++k) {
        v.rho[k] = pi[P.index({1, 1 - k})];
        v.theta[k] = pi[P.index({k + 2, k + 2})];
    }
    return v;
}

BannerView bannerView(const ColoredPoset& P, const PPartition& pi) {
    const auto& pr = P.params();
    if (pr.family != Family::Banner) throw std::invalid_argument("bannerView: not a banner");
    BannerView v;
    for (int i = 1; i <= 4; ++i)
        for (int j = i; j <= pr.alpha.part(i) + i - 1; ++j) v.sigma[{i, j}] = pi[P.index({i, j})];
    v.rho.assign(pr.f + 1, 0);
    v.theta.assign(pr.f + 1, 0);
    for (int i = 1; i <= pr.f; ++i) {
        v.rho[i] = pi[P.index({1, 2 - i})];
        v.theta[i] = pi[P.index({i + 2, 3})];
    }
    return v;
}

QTFactored weightShifted(const Partition& alpha, const ShapeArray& pi) { return fD(alpha, pi) * fND(alpha, pi); }

QTFactored weightBird(const Partition& alpha, const Partition& beta, int f, const BirdView& v, PhiReading reading) {
    auto s = [&](int i, int j) { return shapeValue(v.sigma, i, j); };
    auto t = [&](int i, int j) { return shapeValue(v.tau, i, j); };
    QTFactored num = fArg(s(2, 2) - s(1, 2), 0) * fArg(t(2, 2) - t(1, 2), 0) * fArg(v.rho[f], 0) *
                     fArg(v.theta[f], f + 1);
    QTFactored den = fArg(s(2, 2) - s(1, 1), 0) * fArg(s(2, 2) - s(1, 1), 1);
    return num / den * phiCap(0, f, v.rho, v.theta, reading) * fND(alpha, v.sigma) * fND(beta, v.tau);
}

// The boundary is the Phi-hat one: fD already pairs (1,1) and (3,3) with the
// zero-convention cells that stand in for the head, so f(rho_1;0) f(theta_1;2)
// must be divided out.
QTFactored weightBanner(const Partition& alpha, int f, const BannerView& v, PhiReading reading) {
    return phiHat(1, f, v.rho, v.theta, reading) * fD(alpha, v.sigma) * fND(alpha, v.sigma);
}

QTFactored weightFamily(const ColoredPoset& P, const PPartition& pi, PhiReading reading) {
    const auto& pr = P.params();
    switch (pr.family) {
        case Family::Shifted: return weightShifted(pr.alpha, shiftedView(P, pi));
        case Family::Bird: return weightBird(pr.alpha, pr.beta, pr.f, birdView(P, pi), reading);
        case Family::Banner: return weightBanner(pr.alpha, pr.f, bannerView(P, pi), reading);
        case Family::Custom: break;
    }
    throw std::invalid_argument("weightFamily: custom posets have no family form");
}

std::vector<Partition> traces(const Partition& alpha, const ShapeArray& pi, int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> parts;
        for (int i = alpha.length(); i >= 1; --i)
            if (inShifted(alpha, i, k + i)) parts.push_back(shapeValue(pi, i, k + i));
        out.emplace_back(parts);
    }
    return out;
}

std::vector<int> epsilon(const Partition& alpha, int n) {
    std::vector<int> eps;
    for (int k = 1; k <= n; ++k)
        eps.push_back(std::find(alpha.parts().begin(), alpha.parts().end(), k) != alpha.parts().end() ? 1 : -1);
    return eps;
}

namespace {

QTFactored bracketProduct(const std::vector<Partition>& chain, const std::vector<int>& eps, bool psiForm) {
    if (chain.size() != eps.size() + 1) throw std::invalid_argument("trace chain and epsilon lengths differ");
    QTFactored out(1);
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const auto& prev = chain[i - 1];
        const auto& cur = chain[i];
        if (eps[i - 1] == 1) {
            if (!isHorizontalStrip(prev, cur)) throw std::invalid_argument("trace chain incompatible with epsilon");
            out *= psiForm ? psiSkew(prev, cur) : phiSkew(prev, cur);
        } else {
            if (!isHorizontalStrip(cur, prev)) throw std::invalid_argument("trace chain incompatible with epsilon");
            out *= psiForm ? phiSkew(cur, prev) : psiSkew(cur, prev);
        }
    }
    return out;
}

// prod_i alias(i)^(eps_i |chain[i-1] - chain[i]|_eps_i); aliases are only
// evaluated where the exponent is nonzero.
template <class Alias>
Exps traceMonomial(int width, const std::vector<Partition>& chain, const std::vector<int>& eps, Alias alias) {
    Exps e(width, 0);
    for (std::size_t i = 1; i < chain.size(); ++i) {
        int d = eps[i - 1] == 1 ? chain[i - 1].weight() - chain[i].weight() : chain[i].weight() - chain[i - 1].weight();
        int k = eps[i - 1] * d;
        if (k != 0) e = addExps(e, scaleExps(alias(static_cast<int>(i)), k));
    }
    return e;
}

}  // namespace

QTFactored psiEps(const std::vector<Partition>& chain, const std::vector<int>& eps) {
    return bracketProduct(chain, eps, true);
}

QTFactored phiEps(const std::vector<Partition>& chain, const std::vector<int>& eps) {
    return bracketProduct(chain, eps, false);
}

TraceWeight weightViaTraces(const ColoredPoset& P, const PPartition& pi, int horizon, int horizonLeft) {
    const auto& pr = P.params();
    HookAliases A(P);
    const int width = P.vars()->size();
    auto zt = [&](int i) { return A.zt(i); };
    if (pr.family == Family::Shifted) {
        int n = horizon > 0 ? horizon : pr.alpha.part(1);
        auto sa = shiftedView(P, pi);
        auto tr = traces(pr.alpha, sa, n);
        auto eps = epsilon(pr.alpha, n);
        TraceWeight out{bEl(tr[0]) * psiEps(tr, eps), traceMonomial(width, tr, eps, zt)};
        int wexp = (tr[0].weight() - tr[0].oddColumns()) / 2;
        if (wexp) out.monomial = addExps(out.monomial, scaleExps(A.w(), wexp));
        return out;
    }
    if (pr.family == Family::Bird) {
        int m = horizon > 0 ? horizon : pr.alpha.part(1);
        int n = horizonLeft > 0 ? horizonLeft : pr.beta.part(1);
        auto v = birdView(P, pi);
        auto sig = traces(pr.alpha, v.sigma, m);
        auto tau = traces(pr.beta, v.tau, n);
        auto ea = epsilon(pr.alpha, m), eb = epsilon(pr.beta, n);
        std::vector<Exps> xt;
        for (int i = 0; i <= pr.f; ++i) xt.push_back(A.xt(i));
        auto [phi, mono] = phiTilde(0, pr.f, v.rho, v.theta, xt);
        TraceWeight out{phi * psiEps(sig, ea) * phiEps(tau, eb), mono};
        out.monomial = addExps(out.monomial, scaleExps(xt[0], v.rho[0] + v.theta[0]));
        out.monomial = addExps(out.monomial, traceMonomial(width, sig, ea, zt));
        out.monomial = addExps(out.monomial, traceMonomial(width, tau, eb, [&](int i) { return A.yt(i); }));
        return out;
    }
    if (pr.family == Family::Banner) {
        int n = horizon > 0 ? horizon : pr.alpha.part(1);
        auto v = bannerView(P, pi);
        auto sig = traces(pr.alpha, v.sigma, n);
        auto eps = epsilon(pr.alpha, n);
        std::vector<Exps> xt{P.vars()->one()};
        for (int i = 1; i <= pr.f; ++i) xt.push_back(A.xt(i));
        auto [phi, mono] = phiTilde(1, pr.f, v.rho, v.theta, xt);
        TraceWeight out{phi * bEl(sig[0]) * psiEps(sig, eps), mono};
        int k = shapeValue(v.sigma, 1, 1) + shapeValue(v.sigma, 3, 3);
        out.monomial = addExps(out.monomial, scaleExps(addExps(xt[2], A.w()), k));
        out.monomial = addExps(out.monomial, traceMonomial(width, sig, eps, zt));
        return out;
    }
    throw std::invalid_argument("weightViaTraces: custom posets have no trace form");
}

QTFactored weightShiftedPhiForm(const Partition& alpha, const ShapeArray& pi, int horizon) {
    int n = horizon > 0 ? horizon : alpha.part(1);
    auto tr = traces(alpha, pi, n);
    return bEl(tr[0]) / bLambda(tr[0]) * phiEps(tr, epsilon(alpha, n));
}

int shiftedWExponentDiagonal(const Partition& alpha, const ShapeArray& pi) {
    int s = 0;
    for (int i = alpha.length() - 1; i >= 1; i -= 2) s += shapeValue(pi, i, i);
    return s;
}

VerificationReport weightAgreementCheck(const ColoredPoset& P, int D, long maxCases) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "weight-agreement";
    rep.family = familyName(P.params().family);
    rep.params = P.params().toJson();
    rep.degree = D;
    WeightPlan plan = makeWeightPlan(P);
    const auto& pr = P.params();
    forEachPPartition(P, D, [&](const PPartition& pi) {
        if (!rep.pass || (maxCases >= 0 && rep.cases >= maxCases)) return;
        ++rep.cases;
        std::string where = nlohmann::json(pi).dump();
        QTFactored g = weightGeneric(plan, pi);
        QTFactored fam = weightFamily(P, pi);
        if (!qtEquals(g, fam, Mode::Exact)) rep.fail({where, "generic " + g.toString(), "family " + fam.toString()});
        auto tw = weightViaTraces(P, pi);
        if (!qtEquals(g, tw.weight, Mode::Exact))
            rep.fail({where, "generic " + g.toString(), "traces " + tw.weight.toString()});
        Exps z = zMonomial(P, pi);
        if (tw.monomial != z) rep.fail({where, P.vars()->format(z), P.vars()->format(tw.monomial)});
        if (pr.family == Family::Shifted) {
            auto sa = shiftedView(P, pi);
            QTFactored alt = weightShiftedPhiForm(pr.alpha, sa);
            if (!qtEquals(g, alt, Mode::Exact))
                rep.fail({where, "generic " + g.toString(), "phi form " + alt.toString()});
            auto tr = traces(pr.alpha, sa, pr.alpha.part(1));
            int viaTrace = (tr[0].weight() - tr[0].oddColumns()) / 2;
            if (viaTrace != shiftedWExponentDiagonal(pr.alpha, sa))
                rep.fail({where, "w exponent " + std::to_string(viaTrace),
                          std::to_string(shiftedWExponentDiagonal(pr.alpha, sa))});
        }
    });
    rep.elapsedMs = sw.ms();
    return rep;
}

VerificationReport verifyOkada(const ColoredPoset& P, int D, Mode mode, const std::vector<EvalPoint>& points,
                               bool corrupt) {
    if (mode == Mode::Exact) return verifyOkadaWith(ExactRing{}, P, D, corrupt);
    Stopwatch sw;
    VerificationReport rep;
    rep.check = corrupt ? "okada-corrupted" : "okada";
    rep.family = familyName(P.params().family);
    rep.params = P.params().toJson();
    rep.degree = D;
    rep.mode = Mode::Eval;
    rep.points = points;
    for (const auto& pt : points) {
        auto sub = verifyOkadaWith(EvalRing(pt), P, D, corrupt);
        if (!sub.pass && sub.mismatch) sub.note = "at " + pt.toString();
        rep.absorb(sub);
    }
    rep.elapsedMs = sw.ms();
    return rep;
}

namespace detail {

std::vector<std::vector<int>> compositions(int total, int parts) {
    std::vector<std::vector<int>> out;
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(parts, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == parts - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

}  // namespace detail

}  // namespace qthook
