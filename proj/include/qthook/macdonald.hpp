#pragma once

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qthook/series.hpp"

namespace qthook {

// Exponent vector of a partition padded to n slots.
Exps partitionExps(const Partition& p, int n);
// Sorted nonzero entries of an exponent vector.
Partition exponentShape(const Exps& e);

// ---- power sums and the (q,t) scalar product ------------------------------

// Row mu holds m_mu in the power-sum basis, both indexed by partitionsOf(d).
std::vector<std::vector<mpq_class>> monomialInPowerSums(int d);
mpq_class zee(const Partition& rho);
// <p_rho, p_rho> = z_rho prod (1 - q^{rho_i}) / (1 - t^{rho_i})
QTFactored powerSumNorm(const Partition& rho);

// Independent construction of P_lambda by orthogonalising monomial symmetric
// functions in the power-sum inner product. Coefficients of m_mu are
// numerators[mu] / denominator; only mu with length <= n are kept.
struct GramResult {
    Partition lambda;
    int n = 0;
    std::map<Partition, BiPoly> numerators;
    BiPoly denominator;
};
inline constexpr int kGramBudget = 6;
GramResult gramP(const Partition& lambda, int n);

template <class C>
bool isSymmetric(const Poly<C>& p) {
    for (const auto& [e, c] : p)
        for (std::size_t i = 0; i + 1 < e.size(); ++i) {
            if (e[i] == e[i + 1]) continue;
            Exps s = e;
            std::swap(s[i], s[i + 1]);
            auto it = p.find(s);
            if (it == p.end() || !coeffIsZero(it->second - c)) return false;
        }
    return true;
}

// Macdonald polynomials in finitely many variables, built from Pieri strip
// chains. Results are cached per (lambda, mu, n).
template <class R>
class Macdonald {
public:
    using C = typename R::value_type;

    explicit Macdonald(R ring) : ring_(std::move(ring)) {}
    const R& ring() const { return ring_; }

    const Poly<C>& skewP(const Partition& lambda, const Partition& mu, int n) { return chain(lambda, mu, n, false); }
    const Poly<C>& skewQ(const Partition& lambda, const Partition& mu, int n) { return chain(lambda, mu, n, true); }
    const Poly<C>& P(const Partition& lambda, int n) { return skewP(lambda, {}, n); }
    const Poly<C>& Q(const Partition& lambda, int n) { return skewQ(lambda, {}, n); }
    const Poly<C>& gR(int r, int n) { return r == 0 ? skewQ({}, {}, n) : skewQ(Partition{r}, {}, n); }

    // Coefficients of a symmetric polynomial in the P basis.
    std::map<Partition, C> expandInPBasis(Poly<C> f, int n) {
        std::map<Partition, C> out;
        while (!f.empty()) {
            const auto& [lead, c] = *f.rbegin();
            if (!std::is_sorted(lead.rbegin(), lead.rend()))
                throw std::invalid_argument("expandInPBasis: input is not symmetric");
            Partition lam = exponentShape(lead);
            C coeff = c;
            out.emplace(lam, coeff);
            for (const auto& [e, v] : P(lam, n)) polyAdd(f, e, -(v * coeff));
            if (f.count(lead)) throw std::logic_error("expandInPBasis: leading term did not cancel");
        }
        return out;
    }

    // f^lambda_{mu nu}: P_mu P_nu = sum_lambda f^lambda_{mu nu} P_lambda.
    std::map<Partition, C> structureConstants(const Partition& mu, const Partition& nu, int n) {
        if (n < mu.length() + nu.length()) throw std::invalid_argument("structureConstants: too few variables");
        return expandInPBasis(polyMul(P(mu, n), P(nu, n)), n);
    }

private:
    const Poly<C>& chain(const Partition& lambda, const Partition& mu, int n, bool qForm) {
        if (!lambda.contains(mu)) throw std::invalid_argument("skew shape: mu not contained in lambda");
        auto key = std::make_tuple(lambda, mu, n, qForm);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;

        std::map<Partition, Poly<C>> cur;
        Poly<C> start;
        start.emplace(Exps(n, 0), ring_.one());
        cur.emplace(mu, std::move(start));
        for (int i = 0; i < n; ++i) {
            std::map<Partition, Poly<C>> next;
            for (const auto& [kappa, poly] : cur) {
                for (const auto& nu : stripsBetween(kappa, lambda)) {
                    // Only lambda itself is useful after the last variable.
                    if (i == n - 1 && nu != lambda) continue;
                    C c = ring_.lift(qForm ? phiSkew(nu, kappa) : psiSkew(nu, kappa));
                    int step = nu.weight() - kappa.weight();
                    auto& dst = next[nu];
                    for (const auto& [e, v] : poly) {
                        Exps f = e;
                        f[i] += step;
                        polyAdd(dst, f, v * c);
                    }
                }
            }
            cur = std::move(next);
        }
        Poly<C> result;
        if (auto f = cur.find(lambda); f != cur.end()) result = std::move(f->second);
        return cache_.emplace(key, std::move(result)).first->second;
    }

    R ring_;
    std::map<std::tuple<Partition, Partition, int, bool>, Poly<C>> cache_;
};

// ---- series helpers --------------------------------------------------------

// Pi(x;y) = prod_{a,b} F(x_a y_b) over the given variable slots.
template <class R>
MultiSeries<typename R::value_type> kernelSeries(const R& ring, const VarSetPtr& vars, const std::vector<int>& xs,
                                                 const std::vector<int>& ys, int D) {
    auto out = MultiSeries<typename R::value_type>::constant(vars, D, ring.one());
    for (int a : xs)
        for (int b : ys) {
            Exps m = vars->one();
            m[a] += 1;
            m[b] += 1;
            out *= seriesF(ring, vars, m, D);
        }
    return out;
}

std::vector<int> slotRange(int begin, int count);
std::vector<std::string> numberedVars(const std::string& stem, int count);

// ---- identity checks -------------------------------------------------------

enum class PieriKind { Phi, Psi };

template <class R>
VerificationReport pieriCheck(Macdonald<R>& M, const Partition& mu, int r, int n, PieriKind kind) {
    using C = typename R::value_type;
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "pieri";
    rep.params = {{"mu", mu.toString()}, {"r", r}, {"n", n}, {"kind", kind == PieriKind::Phi ? "phi" : "psi"}};
    stampRing(M.ring(), rep);
    if (mu.length() > n) throw std::invalid_argument("pieriCheck: length(mu) > n");
    const auto& base = kind == PieriKind::Phi ? M.P(mu, n) : M.Q(mu, n);
    auto expansion = M.expandInPBasis(polyMul(base, M.gR(r, n)), n);
    std::map<Partition, C> expected;
    for (const auto& lam : addHorizontalStrip(mu, r, n)) {
        // Q_mu g_r = sum psi Q_lambda, so the P-coefficient carries b_lambda.
        QTFactored c = kind == PieriKind::Phi ? phiSkew(lam, mu) : psiSkew(lam, mu) * bLambda(lam);
        expected.emplace(lam, M.ring().lift(c));
    }
    std::set<Partition> keys;
    for (const auto& kv : expansion) keys.insert(kv.first);
    for (const auto& kv : expected) keys.insert(kv.first);
    for (const auto& lam : keys) {
        ++rep.cases;
        C a = expansion.count(lam) ? expansion.at(lam) : C();
        C b = expected.count(lam) ? expected.at(lam) : C();
        if (!coeffIsZero(a - b)) {
            rep.fail({"P_" + lam.toString(), R::str(a), R::str(b)});
            break;
        }
    }
    rep.elapsedMs = sw.ms();
    return rep;
}

template <class R>
VerificationReport cauchyCheck(Macdonald<R>& M, int n, int m, int D) {
    Stopwatch sw;
    const auto& ring = M.ring();
    auto names = numberedVars("x", n);
    auto ys = numberedVars("y", m);
    names.insert(names.end(), ys.begin(), ys.end());
    auto vars = makeVarSet(names);
    auto xSlots = slotRange(0, n), ySlots = slotRange(n, m);

    MultiSeries<typename R::value_type> lhs(vars, D);
    for (const auto& lam : partitionsUpTo(D / 2, std::min(n, m))) {
        auto term = polyMul(embedPoly(M.P(lam, n), xSlots, n + m), embedPoly(M.Q(lam, m), ySlots, n + m));
        addWithFloor(lhs, term, 2 * lam.weight());
    }
    auto rhs = kernelSeries(ring, vars, xSlots, ySlots, D);
    auto rep = seriesEquals(ring, lhs, rhs);
    rep.check = "cauchy";
    rep.params = {{"n", n}, {"m", m}};
    rep.elapsedMs = sw.ms();
    return rep;
}

template <class R>
VerificationReport branchingCheck(Macdonald<R>& M, const Partition& lambda, int nx, int nz) {
    using C = typename R::value_type;
    Stopwatch sw;
    int width = nx + nz;
    auto names = numberedVars("x", nx);
    auto zs = numberedVars("z", nz);
    names.insert(names.end(), zs.begin(), zs.end());
    VarSet vars(names);
    auto xSlots = slotRange(0, nx), zSlots = slotRange(nx, nz);
    VerificationReport rep;
    rep.check = "branching";
    rep.params = {{"lambda", lambda.toString()}, {"nx", nx}, {"nz", nz}};
    stampRing(M.ring(), rep);
    for (bool qForm : {false, true}) {
        const auto& whole = qForm ? M.Q(lambda, width) : M.P(lambda, width);
        Poly<C> split;
        for (const auto& mu : subPartitions(lambda)) {
            if (mu.length() > nz) continue;
            const auto& outer = qForm ? M.skewQ(lambda, mu, nx) : M.skewP(lambda, mu, nx);
            const auto& inner = qForm ? M.Q(mu, nz) : M.P(mu, nz);
            for (const auto& [e, c] : polyMul(embedPoly(outer, xSlots, width), embedPoly(inner, zSlots, width)))
                polyAdd(split, e, c);
        }
        rep.absorb(comparePolys(M.ring(), vars, whole, split));
    }
    rep.elapsedMs = sw.ms();
    return rep;
}

template <class R>
VerificationReport qpLemmaCheck(Macdonald<R>& M, const Partition& mu, const Partition& nu, int nx, int ny, int D) {
    Stopwatch sw;
    const auto& ring = M.ring();
    int width = nx + ny;
    auto names = numberedVars("x", nx);
    auto ys = numberedVars("y", ny);
    names.insert(names.end(), ys.begin(), ys.end());
    auto vars = makeVarSet(names);
    auto xSlots = slotRange(0, nx), ySlots = slotRange(nx, ny);

    MultiSeries<typename R::value_type> lhs(vars, D);
    // Q_{lambda/mu} P_{lambda/nu} has degree 2|lambda| - |mu| - |nu|.
    int maxWeight = (D + mu.weight() + nu.weight()) / 2;
    for (const auto& lam : partitionsContaining(mu, std::max(0, maxWeight - mu.weight()))) {
        if (!lam.contains(nu)) continue;
        int floor = 2 * lam.weight() - mu.weight() - nu.weight();
        if (floor > D) continue;
        auto term = polyMul(embedPoly(M.skewQ(lam, mu, nx), xSlots, width),
                            embedPoly(M.skewP(lam, nu, ny), ySlots, width));
        addWithFloor(lhs, term, floor);
    }
    MultiSeries<typename R::value_type> tauSum(vars, D);
    for (const auto& tau : subPartitions(mu)) {
        if (!nu.contains(tau)) continue;
        auto term = polyMul(embedPoly(M.skewQ(nu, tau, nx), xSlots, width),
                            embedPoly(M.skewP(mu, tau, ny), ySlots, width));
        addWithFloor(tauSum, term, nu.weight() + mu.weight() - 2 * tau.weight());
    }
    auto rhs = kernelSeries(ring, vars, xSlots, ySlots, D) * tauSum;
    auto rep = seriesEquals(ring, lhs, rhs);
    rep.check = "qp-lemma";
    rep.params = {{"mu", mu.toString()}, {"nu", nu.toString()}, {"nx", nx}, {"ny", ny}};
    rep.elapsedMs = sw.ms();
    return rep;
}

// varSize variables in each of x^0..x^{T-1}, y^1..y^T.
template <class R>
VerificationReport gMacMahonCheck(Macdonald<R>& M, int T, const Partition& mu0, const Partition& muT, int varSize,
                                  int D) {
    using C = typename R::value_type;
    if (T < 1) throw std::invalid_argument("gMacMahonCheck: T >= 1");
    Stopwatch sw;
    const auto& ring = M.ring();
    std::vector<std::string> names;
    for (int i = 0; i < T; ++i)
        for (auto& s : numberedVars("x" + std::to_string(i) + "_", varSize)) names.push_back(s);
    for (int j = 1; j <= T; ++j)
        for (auto& s : numberedVars("y" + std::to_string(j) + "_", varSize)) names.push_back(s);
    auto vars = makeVarSet(names);
    int width = 2 * T * varSize;
    auto xSlots = [&](int i) { return slotRange(i * varSize, varSize); };
    auto ySlots = [&](int j) { return slotRange((T + j - 1) * varSize, varSize); };

    // mu^0 ⊂ lambda^1 ⊃ mu^1 ⊂ ... ⊂ lambda^T ⊃ mu^T
    MultiSeries<C> lhs(vars, D);
    auto rec = [&](auto&& self, int i, const Partition& prevMu, const Poly<C>& acc, int degree) -> void {
        // choose lambda^i ⊇ prevMu, then mu^i ⊆ lambda^i (mu^T fixed).
        int budget = D - degree;
        for (const auto& lam : partitionsContaining(prevMu, budget)) {
            int up = lam.weight() - prevMu.weight();
            auto q = polyMul(acc, embedPoly(M.skewQ(lam, prevMu, varSize), xSlots(i - 1), width));
            std::vector<Partition> downs;
            if (i == T) {
                if (lam.contains(muT)) downs.push_back(muT);
            } else {
                downs = subPartitions(lam);
            }
            for (const auto& mu : downs) {
                int down = lam.weight() - mu.weight();
                int total = degree + up + down;
                if (total > D) continue;
                auto p = polyMul(q, embedPoly(M.skewP(lam, mu, varSize), ySlots(i), width));
                if (i == T)
                    addWithFloor(lhs, p, total);
                else
                    self(self, i + 1, mu, p, total);
            }
        }
    };
    Poly<C> one;
    one.emplace(Exps(width, 0), ring.one());
    rec(rec, 1, mu0, one, 0);

    auto rhs = MultiSeries<C>::constant(vars, D, ring.one());
    for (int i = 0; i < T; ++i)
        for (int j = i + 1; j <= T; ++j) rhs *= kernelSeries(ring, vars, xSlots(i), ySlots(j), D);
    std::vector<int> allX, allY;
    for (int i = 0; i < T; ++i)
        for (int s : xSlots(i)) allX.push_back(s);
    for (int j = 1; j <= T; ++j)
        for (int s : ySlots(j)) allY.push_back(s);
    MultiSeries<C> nuSum(vars, D);
    for (const auto& nu : subPartitions(muT)) {
        if (!mu0.contains(nu)) continue;
        auto term = polyMul(embedPoly(M.skewQ(muT, nu, T * varSize), allX, width),
                            embedPoly(M.skewP(mu0, nu, T * varSize), allY, width));
        addWithFloor(nuSum, term, muT.weight() + mu0.weight() - 2 * nu.weight());
    }
    rhs *= nuSum;
    auto rep = seriesEquals(ring, lhs, rhs);
    rep.check = "gmacmahon";
    rep.params = {{"T", T}, {"mu0", mu0.toString()}, {"muT", muT.toString()}, {"varSize", varSize}};
    rep.elapsedMs = sw.ms();
    return rep;
}

// Both interlacing partition-sum identities; variant 1 uses P^eps, variant 2 Q^eps.
template <class R>
VerificationReport partitionSumCheck(Macdonald<R>& M, const std::vector<int>& eps, const Partition& lambda0,
                                     const Partition& lambdaN, int varSize, int D) {
    using C = typename R::value_type;
    if (eps.empty()) throw std::invalid_argument("partitionSumCheck: empty sign sequence");
    Stopwatch sw;
    const auto& ring = M.ring();
    int n = static_cast<int>(eps.size());
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (auto& s : numberedVars("x" + std::to_string(i) + "_", varSize)) names.push_back(s);
    auto vars = makeVarSet(names);
    int width = n * varSize;
    auto slots = [&](int i) { return slotRange((i - 1) * varSize, varSize); };
    std::vector<int> minusSlots, plusSlots;
    for (int i = 1; i <= n; ++i)
        for (int s : slots(i)) (eps[i - 1] < 0 ? minusSlots : plusSlots).push_back(s);

    VerificationReport rep;
    rep.check = "partition-sum";
    std::string epsText;
    for (int e : eps) epsText += e > 0 ? '+' : '-';
    rep.params = {{"eps", epsText}, {"lambda0", lambda0.toString()}, {"lambdaN", lambdaN.toString()},
                  {"varSize", varSize}};
    rep.degree = D;
    stampRing(ring, rep);

    auto kernel = MultiSeries<C>::constant(vars, D, ring.one());
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (eps[i - 1] == -1 && eps[j - 1] == 1) kernel *= kernelSeries(ring, vars, slots(i), slots(j), D);

    for (int variant : {1, 2}) {
        bool swap = variant == 2;
        // Step i: eps=+1 removes (lambda^{i-1} ⊇ lambda^i), eps=-1 adds.
        auto stepPoly = [&](int i, const Partition& prev, const Partition& next) -> Poly<C> {
            bool plus = eps[i - 1] > 0;
            const Partition& big = plus ? prev : next;
            const Partition& small = plus ? next : prev;
            bool useP = plus != swap;
            const auto& p = useP ? M.skewP(big, small, varSize) : M.skewQ(big, small, varSize);
            return embedPoly(p, slots(i), width);
        };
        MultiSeries<C> lhs(vars, D);
        auto rec = [&](auto&& self, int i, const Partition& prev, const Poly<C>& acc, int degree) -> void {
            std::vector<Partition> candidates;
            if (i == n) {
                bool ok = eps[i - 1] > 0 ? prev.contains(lambdaN) : lambdaN.contains(prev);
                if (ok) candidates.push_back(lambdaN);
            } else if (eps[i - 1] > 0) {
                candidates = subPartitions(prev);
            } else {
                candidates = partitionsContaining(prev, D - degree);
            }
            for (const auto& next : candidates) {
                int total = degree + std::abs(next.weight() - prev.weight());
                if (total > D) continue;
                auto p = polyMul(acc, stepPoly(i, prev, next));
                if (i == n)
                    addWithFloor(lhs, p, total);
                else
                    self(self, i + 1, next, p, total);
            }
        };
        Poly<C> one;
        one.emplace(Exps(width, 0), ring.one());
        rec(rec, 1, lambda0, one, 0);

        MultiSeries<C> nuSum(vars, D);
        int nm = static_cast<int>(minusSlots.size()), np = static_cast<int>(plusSlots.size());
        for (const auto& nu : subPartitions(lambdaN)) {
            if (!lambda0.contains(nu)) continue;
            const auto& a = swap ? M.skewP(lambdaN, nu, nm) : M.skewQ(lambdaN, nu, nm);
            const auto& b = swap ? M.skewQ(lambda0, nu, np) : M.skewP(lambda0, nu, np);
            auto term = polyMul(embedPoly(a, minusSlots, width), embedPoly(b, plusSlots, width));
            addWithFloor(nuSum, term, lambdaN.weight() + lambda0.weight() - 2 * nu.weight());
        }
        auto sub = seriesEquals(ring, lhs, kernel * nuSum);
        sub.note = "identity " + std::to_string(variant);
        rep.absorb(sub);
    }
    rep.elapsedMs = sw.ms();
    return rep;
}

enum class WarnaarVariant { OddArm, EvenLeg, Odd, Even };
std::string warnaarName(WarnaarVariant v);
WarnaarVariant parseWarnaar(const std::string& name);
// Power of w attached to lambda in the summand.
int warnaarWExponent(WarnaarVariant v, const Partition& lambda);
QTFactored warnaarCoefficient(WarnaarVariant v, const Partition& lambda);
// Coefficient of y^k in (qty;q^2)_inf / (y;q^2)_inf.
QTFactored oddArmDiagonalCoeff(int k);

template <class R>
VerificationReport warnaarCheck(Macdonald<R>& M, WarnaarVariant variant, int n, int D, bool withW) {
    using C = typename R::value_type;
    if (n < 1) throw std::invalid_argument("warnaarCheck: n >= 1");
    Stopwatch sw;
    const auto& ring = M.ring();
    auto names = numberedVars("x", n);
    if (withW) names.push_back("w");
    auto vars = makeVarSet(names);
    int width = vars->size();
    auto xSlots = slotRange(0, n);
    auto wUnit = [&](int k) {
        Exps e = vars->one();
        if (withW) e[n] = k;
        return e;
    };

    MultiSeries<C> lhs(vars, D);
    for (const auto& lam : partitionsUpTo(D, n)) {
        Poly<C> term;
        C c = ring.lift(warnaarCoefficient(variant, lam));
        Exps shift = wUnit(warnaarWExponent(variant, lam));
        for (const auto& [e, v] : embedPoly(M.P(lam, n), xSlots, width)) polyAdd(term, addExps(e, shift), v * c);
        addWithFloor(lhs, term, lam.weight());
    }

    auto rhs = MultiSeries<C>::constant(vars, D, ring.one());
    auto x = [&](int i) {
        Exps e = vars->one();
        e[i] = 1;
        return e;
    };
    bool singleW = variant == WarnaarVariant::EvenLeg || variant == WarnaarVariant::Odd;
    bool pairW = variant == WarnaarVariant::Odd || variant == WarnaarVariant::Even;
    for (int i = 0; i < n; ++i) {
        if (variant == WarnaarVariant::OddArm) {
            MultiSeries<C> lin(vars, D);
            lin.add(vars->one(), ring.one());
            lin.add(addExps(x(i), wUnit(1)), ring.one());
            rhs *= lin;
            rhs *= seriesFromCoefficients(ring, vars, scaleExps(x(i), 2), D, oddArmDiagonalCoeff);
        } else {
            rhs *= seriesF(ring, vars, singleW ? addExps(x(i), wUnit(1)) : x(i), D);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Exps m = addExps(x(i), x(j));
            if (pairW) m = addExps(m, wUnit(1));
            rhs *= seriesF(ring, vars, m, D);
        }
    auto rep = seriesEquals(ring, lhs, rhs);
    rep.check = "warnaar-" + warnaarName(variant);
    rep.params = {{"n", n}, {"withW", withW}};
    rep.elapsedMs = sw.ms();
    return rep;
}

// Q_{lambda/mu} against sum_nu f^lambda_{mu nu} Q_nu.
template <class R>
VerificationReport qSkewStructureCheck(Macdonald<R>& M, const Partition& lambda, const Partition& mu) {
    using C = typename R::value_type;
    int n = std::max(1, lambda.weight());
    VerificationReport rep;
    rep.check = "q-skew-structure";
    rep.params = {{"lambda", lambda.toString()}, {"mu", mu.toString()}};
    stampRing(M.ring(), rep);
    Poly<C> viaConstants;
    for (const auto& nu : partitionsOf(lambda.weight() - mu.weight())) {
        auto f = M.structureConstants(mu, nu, n);
        auto it = f.find(lambda);
        if (it == f.end()) continue;
        for (const auto& [e, v] : M.Q(nu, n)) polyAdd(viaConstants, e, v * it->second);
    }
    VarSet vars(numberedVars("x", n));
    rep.absorb(comparePolys(M.ring(), vars, M.skewQ(lambda, mu, n), viaConstants));
    return rep;
}

// skewQ = (b_lambda / b_mu) skewP, coefficientwise.
template <class R>
VerificationReport skewQPRatioCheck(Macdonald<R>& M, const Partition& lambda, const Partition& mu, int n) {
    using C = typename R::value_type;
    VerificationReport rep;
    rep.check = "skew-q-p-ratio";
    rep.params = {{"lambda", lambda.toString()}, {"mu", mu.toString()}, {"n", n}};
    stampRing(M.ring(), rep);
    C ratio = M.ring().lift(bLambda(lambda) / bLambda(mu));
    Poly<C> scaled;
    for (const auto& [e, v] : M.skewP(lambda, mu, n)) polyAdd(scaled, e, v * ratio);
    VarSet vars(numberedVars("x", n));
    rep.absorb(comparePolys(M.ring(), vars, M.skewQ(lambda, mu, n), scaled));
    return rep;
}

// <P_lambda, Q_mu> computed through the power-sum expansion.
RatQT scalarProductPQ(Macdonald<ExactRing>& M, const Partition& lambda, const Partition& mu);
VerificationReport orthonormalityCheck(Macdonald<ExactRing>& M, int maxWeight, int n);
VerificationReport gramCheck(Macdonald<ExactRing>& M, const Partition& lambda, int n);
// P_lambda at q = t against the Schur polynomial, at rational sample points.
VerificationReport schurCheck(const Partition& lambda, int n, std::uint64_t seed, int samples);

}  // namespace qthook
