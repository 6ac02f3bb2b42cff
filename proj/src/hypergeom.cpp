#include "qthook/hypergeom.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "qthook/coeff.hpp"
#include "qthook/hookformula.hpp"

namespace qthook {

QRat qPoch(const QRat& a, const QRat& q, int n) {
    QRat out = 1;
    if (n >= 0) {
        QRat x = a;
        for (int k = 0; k < n; ++k, x *= q) out *= 1 - x;
        return out;
    }
    if (q == 0) throw std::domain_error("qPoch: negative length needs q != 0");
    QRat qi = 1 / q, x = a * qi;
    for (int k = 1; k <= -n; ++k, x *= qi) {
        if (x == 1) throw std::domain_error("qPoch: vanishing factor at negative length");
        out /= 1 - x;
    }
    return out;
}

QRat qPochProduct(const std::vector<QRat>& as, const QRat& q, int n) {
    QRat out = 1;
    for (const auto& a : as) out *= qPoch(a, q, n);
    return out;
}

std::optional<QRat> exactSqrt(const QRat& x) {
    if (x < 0) return std::nullopt;
    mpz_class n = x.get_num(), d = x.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    QRat r(rn, rd);
    r.canonicalize();
    return r;
}

std::optional<int> negativePowerOf(const QRat& a, const QRat& q, int limit) {
    if (q == 0) return a == 1 ? std::optional<int>(0) : std::nullopt;
    QRat x = a;
    for (int k = 0; k <= limit; ++k, x *= q)
        if (x == 1) return k;
    return std::nullopt;
}

int terminationBound(const SeriesSpec& s) {
    std::optional<int> best = s.termCap;
    for (const auto& a : s.upper)
        if (auto k = negativePowerOf(a, s.q))
            if (!best || *k < *best) best = k;
    if (!best) throw std::invalid_argument("phiSeries: no termination witness and no term cap");
    return *best;
}

QRat phiSeries(const SeriesSpec& s) {
    int N = terminationBound(s);
    QRat sum = 0, term = 1;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) {
            QRat qn1 = 1;
            for (int k = 1; k < n; ++k) qn1 *= s.q;  // q^{n-1}
            QRat num = 1, den = 1 - qn1 * s.q;
            for (const auto& a : s.upper) num *= 1 - a * qn1;
            for (const auto& b : s.lower) den *= 1 - b * qn1;
            if (den == 0) throw std::domain_error("phiSeries: lower-parameter pole at n = " + std::to_string(n));
            term *= num / den * s.z;
        }
        sum += term;
        if (term == 0) break;
    }
    return sum;
}

bool isBalanced(const SeriesSpec& s) {
    QRat up = s.q, down = 1;
    for (const auto& a : s.upper) up *= a;
    for (const auto& b : s.lower) down *= b;
    return up == down && s.z == s.q;
}

int wTailLength(const std::vector<WParam>& tail) {
    int n = 0;
    for (const auto& p : tail) n += p.pair ? 2 : 1;
    return n;
}

namespace {

std::optional<int> wTermination(const QRat& a1, const std::vector<WParam>& tail, const QRat& q) {
    std::optional<int> best = negativePowerOf(a1, q);
    for (const auto& p : tail) {
        auto k = p.pair ? negativePowerOf(p.value, q * q) : negativePowerOf(p.value, q);
        if (k && (!best || *k < *best)) best = k;
    }
    return best;
}

}  // namespace

QRat wSeries(const QRat& a1, const std::vector<WParam>& tail, const QRat& q, const QRat& z) {
    if (a1 == 1) throw std::domain_error("wSeries: a1 = 1");
    auto N = wTermination(a1, tail, q);
    if (!N) throw std::invalid_argument("wSeries: not terminating");
    QRat sum = 0, ratio = 1;
    QRat qn = 1;  // q^n
    for (int n = 0; n <= *N; ++n) {
        if (n > 0) {
            QRat qp = qn;  // q^{n-1}
            qn *= q;
            QRat num = 1 - a1 * qp, den = 1 - qn;
            for (const auto& p : tail) {
                if (p.pair) {
                    num *= 1 - p.value * qp * qp;
                    den *= 1 - q * q * a1 * a1 / p.value * qp * qp;
                } else {
                    num *= 1 - p.value * qp;
                    den *= 1 - q * a1 / p.value * qp;
                }
            }
            if (den == 0) throw std::domain_error("wSeries: pole at n = " + std::to_string(n));
            ratio *= num / den * z;
        }
        sum += ratio * (1 - a1 * qn * qn) / (1 - a1);
        if (ratio == 0) break;
    }
    return sum;
}

std::optional<QRat> wSeriesPhiForm(const QRat& a1, const std::vector<WParam>& tail, const QRat& q, const QRat& z) {
    auto r = exactSqrt(a1);
    if (!r) return std::nullopt;
    // a1 = q^{-2k} makes the well-poised factor 0/0 in this expansion
    if (negativePowerOf(q * *r, q) || negativePowerOf(-q * *r, q))
        throw std::domain_error("wSeries: a1 is an even negative power of q");
    SeriesSpec s;
    s.q = q;
    s.z = z;
    s.upper = {a1, q * *r, -q * *r};
    s.lower = {*r, -*r};
    for (const auto& p : tail) {
        std::vector<QRat> vals;
        if (p.pair) {
            auto sp = exactSqrt(p.value);
            if (!sp) return std::nullopt;
            vals = {*sp, -*sp};
        } else {
            vals = {p.value};
        }
        for (const auto& v : vals) {
            s.upper.push_back(v);
            s.lower.push_back(q * a1 / v);
        }
    }
    auto N = wTermination(a1, tail, q);
    if (!N) throw std::invalid_argument("wSeries: not terminating");
    s.termCap = *N;
    return phiSeries(s);
}

GasperSides gasperSides(const QRat& a, const QRat& b, const QRat& d, const QRat& q, int n, bool corrupt,
                        GasperReading reading) {
    if (n < 0) throw std::invalid_argument("gasper: n >= 0");
    QRat c = 1;
    for (int k = 0; k < n; ++k) c /= q;
    if (a == 0 || b == 0 || d == 0) throw std::domain_error("gasper: zero parameter");
    QRat a1 = b * c / d;
    std::vector<WParam> tail = {
        WParam::plusMinus(b * c * q / (a * d)),
        WParam::plusMinus(q * q * b * c / (reading == GasperReading::Corrected ? a * d : d)),
        WParam::single(a * b / d),
        WParam::single(a * c / d),
        WParam::single(a),
        WParam::single(b),
        WParam::single(c)};
    // Extra witnesses among a, b, d can cut a series short of a lower pole; such draws are degenerate.
    auto poleWithin = [&](const QRat& x, const QRat& base) {
        auto k = negativePowerOf(x, base);
        return k && *k < n;
    };
    for (const QRat& x : std::vector<QRat>{b * q / a, c * q / a, d * q / a})
        if (poleWithin(x, q)) throw std::domain_error("gasper: lower pole inside the range");
    for (const auto& p : tail)
        if (p.pair ? poleWithin(q * q * a1 * a1 / p.value, q * q) : poleWithin(q * a1 / p.value, q))
            throw std::domain_error("gasper: lower pole inside the range");
    GasperSides s;
    SeriesSpec lhs{{a, b, c, d}, {b * q / a, c * q / a, d * q / a}, q, q * q / (a * a), n};
    s.lhs = phiSeries(lhs);
    // Under c = q^{-n} each ratio (xc;q)_inf / (x;q)_inf telescopes to (x q^{-n};q)_n.
    auto tele = [&](const QRat& x, int len) { return qPoch(x * c, q, len); };
    QRat den = tele(a / d, n) * tele(b * q / d, n);
    if (den == 0) throw std::domain_error("gasper: vanishing prefactor");
    s.prefactor = tele(q / d, corrupt ? n + 1 : n) * tele(a * b / d, n) / den;
    s.w = wSeries(a1, tail, q, q / a);
    s.rhs = s.prefactor * s.w;
    return s;
}

VerificationReport gasperCheck(const QRat& a, const QRat& b, const QRat& d, const QRat& q, int n, bool corrupt) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "gasper";
    rep.params = {{"a", a.get_str()}, {"b", b.get_str()}, {"d", d.get_str()}, {"q", q.get_str()}, {"n", n}};
    if (corrupt) rep.params["corrupt"] = true;
    rep.cases = 1;
    auto s = gasperSides(a, b, d, q, n, corrupt);
    if (s.lhs != s.rhs) rep.fail({"c=q^-" + std::to_string(n), s.lhs.get_str(), s.rhs.get_str()});
    rep.elapsedMs = sw.ms();
    return rep;
}

namespace {

QRat randomRational(std::mt19937_64& rng, int maxAbs) {
    std::uniform_int_distribution<int> num(-maxAbs, maxAbs), den(1, maxAbs);
    QRat x(num(rng), den(rng));
    x.canonicalize();
    return x;
}

QRat randomBase(std::mt19937_64& rng) {
    for (;;) {
        QRat q = randomRational(rng, 9);
        if (q != 0 && q != 1 && q != -1) return q;
    }
}

}  // namespace

VerificationReport gasperSweep(std::uint64_t seed, int trials, int maxN, bool corrupt) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "gasper";
    rep.params = {{"seed", seed}, {"trials", trials}, {"maxN", maxN}};
    if (corrupt) rep.params["corrupt"] = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nd(0, maxN);
    int done = 0;
    long resampled = 0;
    while (done < trials) {
        QRat a = randomRational(rng, 9), b = randomRational(rng, 9), d = randomRational(rng, 9);
        QRat q = randomBase(rng);
        int n = nd(rng);
        if (a == 0 || b == 0 || d == 0) {
            ++resampled;
            continue;
        }
        try {
            auto sub = gasperCheck(a, b, d, q, n, corrupt);
            rep.absorb(sub);
            ++done;
        } catch (const std::domain_error&) {
            ++resampled;
        }
        if (resampled > 100 * trials) throw std::runtime_error("gasperSweep: too many degenerate draws");
    }
    rep.note = rep.note.empty() ? "resampled " + std::to_string(resampled) : rep.note;
    rep.elapsedMs = sw.ms();
    return rep;
}

VerificationReport wSeriesDualSweep(std::uint64_t seed, int count) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "w-dual";
    rep.params = {{"seed", seed}, {"count", count}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> small(1, 6), nd(0, 5), len(0, 3);
    int done = 0;
    while (done < count) {
        QRat q = randomBase(rng);
        QRat s(small(rng), small(rng));
        s.canonicalize();
        QRat a1 = s * s;
        std::vector<WParam> tail;
        QRat term = 1;
        int n = nd(rng);
        for (int k = 0; k < n; ++k) term /= q;
        tail.push_back(WParam::single(term));
        if (rng() % 2) {
            QRat u(small(rng), small(rng));
            u.canonicalize();
            tail.push_back(WParam::plusMinus(u * u));
        }
        for (int k = len(rng); k > 0; --k) {
            QRat v = randomRational(rng, 7);
            if (v != 0) tail.push_back(WParam::single(v));
        }
        QRat z = randomRational(rng, 5);
        try {
            QRat perTerm = wSeries(a1, tail, q, z);
            auto phi = wSeriesPhiForm(a1, tail, q, z);
            if (!phi) throw std::logic_error("w-dual: square roots should be exact");
            ++rep.cases;
            ++done;
            if (perTerm != *phi) rep.fail({"a1=" + a1.get_str(), perTerm.get_str(), phi->get_str()});
        } catch (const std::domain_error&) {
        }
    }
    rep.elapsedMs = sw.ms();
    return rep;
}

// ---- the summation identities ---------------------------------------------

namespace {

void requireChain(int k0, int rho0, int theta0, const char* who) {
    if (!(0 <= k0 && k0 <= rho0 && rho0 <= theta0)) throw std::invalid_argument(std::string(who) + ": need 0 <= k0 <= rho0 <= theta0");
}

// Visits weakly decreasing sequences hi >= x_1 >= ... >= x_n >= lo.
void forEachChain(int n, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> x(n);
    std::function<void(int, int)> rec = [&](int i, int cap) {
        if (i == n) {
            fn(x);
            return;
        }
        for (int v = lo; v <= cap; ++v) {
            x[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, hi);
}

// Visits n-tuples of nonnegative integers with sum <= bound (or == bound when exact).
void forEachTuple(int n, int bound, bool exact, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> x(n);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            if (!exact || used == bound) fn(x, used);
            return;
        }
        for (int v = 0; used + v <= bound; ++v) {
            x[i] = v;
            rec(i + 1, used + v);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<QTFactored> generalLhsTerms(int m, int k0, int rho0, int theta0, const std::vector<int>& gamma) {
    requireChain(k0, rho0, theta0, "general");
    int n = static_cast<int>(gamma.size());
    std::vector<QTFactored> out;
    forEachChain(n, k0, rho0, [&](const std::vector<int>& chain) {
        std::vector<int> rho(n + 1), theta(n + 1);
        rho[0] = rho0;
        theta[0] = theta0;
        for (int i = 1; i <= n; ++i) {
            rho[i] = chain[i - 1];
            theta[i] = gamma[i - 1] + theta[i - 1] + rho[i - 1] - rho[i];
        }
        QTFactored w = fFun(rho[n] - k0, 0) * fFun(theta[n] - k0, m + n);
        for (int i = 1; i <= n; ++i) {
            int s = i + m - 1;
            w *= fFun(rho[i - 1] - rho[i], 0) * fFun(theta[i - 1] - rho[i], s) * fFun(theta[i] - rho[i - 1], s) *
                 fFun(theta[i] - theta[i - 1], 0);
            w /= fFun(theta[i] - rho[i], s) * fFun(theta[i] - rho[i], s + 1);
        }
        out.push_back(w);
    });
    return out;
}

std::vector<QTFactored> generalRhsTerms(int m, int k0, int rho0, int theta0, const std::vector<int>& gamma) {
    requireChain(k0, rho0, theta0, "general");
    int n = static_cast<int>(gamma.size());
    std::vector<QTFactored> out;
    forEachTuple(n, rho0 - k0, false, [&](const std::vector<int>& k, int sum) {
        QTFactored w = fFun(rho0 - k0 - sum, 0) * fFun(theta0 - k0 - sum, m);
        for (int i = 0; i < n; ++i) w *= fFun(k[i], 0) * fFun(k[i] + gamma[i], 0);
        out.push_back(w);
    });
    return out;
}

std::vector<QTFactored> lemmaLhsTerms(int m, int k0, int rho0, int theta0, int gamma) {
    requireChain(k0, rho0, theta0, "lemma");
    std::vector<QTFactored> out;
    for (int rho = k0; rho <= rho0; ++rho) {
        int theta = gamma + rho0 + theta0 - rho;
        QTFactored w = fFun(rho - k0, 0) * fFun(theta - k0, m + 1) * fFun(rho0 - rho, 0) * fFun(theta0 - rho, m) *
                       fFun(theta - rho0, m) * fFun(theta - theta0, 0);
        w /= fFun(theta - rho, m) * fFun(theta - rho, m + 1);
        out.push_back(w);
    }
    return out;
}

std::vector<QTFactored> lemmaRhsTerms(int m, int k0, int rho0, int theta0, int gamma) {
    requireChain(k0, rho0, theta0, "lemma");
    std::vector<QTFactored> out;
    for (int k = 0; k <= rho0 - k0; ++k)
        out.push_back(fFun(rho0 - k0 - k, 0) * fFun(theta0 - k0 - k, m) * fFun(k, 0) * fFun(k + gamma, 0));
    return out;
}

std::vector<QTFactored> birdsFinalLhsTerms(int rho0, int theta0, const std::vector<int>& r) {
    requireChain(0, rho0, theta0, "birds-final");
    int f = static_cast<int>(r.size());
    std::vector<QTFactored> out;
    forEachChain(f, 0, rho0, [&](const std::vector<int>& chain) {
        std::vector<int> rho(f + 1), theta(f + 1);
        rho[0] = rho0;
        theta[0] = theta0;
        for (int i = 1; i <= f; ++i) {
            rho[i] = chain[i - 1];
            theta[i] = rho[i - 1] + theta[i - 1] + r[i - 1] - rho[i];
        }
        out.push_back(phiHat(0, f, rho, theta));
    });
    return out;
}

std::vector<QTFactored> birdsFinalRhsTerms(int rho0, int theta0, const std::vector<int>& r) {
    requireChain(0, rho0, theta0, "birds-final");
    int f = static_cast<int>(r.size());
    std::vector<QTFactored> out;
    for (int l = 0; l <= rho0; ++l) {
        QTFactored ratio = fFun(rho0 - l, 0) * fFun(theta0 - l, 1) / (fFun(rho0, 0) * fFun(theta0, 1));
        forEachTuple(f, l, true, [&](const std::vector<int>& ls, int) {
            QTFactored w = ratio;
            for (int i = 0; i < f; ++i) w *= fFun(ls[i], 0) * fFun(ls[i] + r[i], 0);
            out.push_back(w);
        });
    }
    return out;
}

namespace {

void requireFourRow(const std::vector<int>& lambda) {
    if (lambda.size() != 4 || lambda[3] < 0 || lambda[3] > lambda[2] || lambda[2] > lambda[1] ||
        lambda[1] > lambda[0])
        throw std::invalid_argument("banners-final: lambda must be four weakly decreasing entries");
}

}  // namespace

std::vector<QTFactored> bannersFinalLhsTerms(const std::vector<int>& lambda, const std::vector<int>& r) {
    requireFourRow(lambda);
    int f = static_cast<int>(r.size()) + 1;
    std::vector<QTFactored> out;
    forEachChain(f - 1, 0, lambda[3], [&](const std::vector<int>& chain) {
        std::vector<int> rho(f + 1, 0), theta(f + 1, 0);
        rho[1] = lambda[3];
        theta[1] = lambda[1];
        for (int i = 2; i <= f; ++i) {
            rho[i] = chain[i - 2];
            theta[i] = rho[i - 1] + theta[i - 1] + r[i - 2] - rho[i];
        }
        out.push_back(phiHat(1, f, rho, theta));
    });
    return out;
}

std::vector<QTFactored> bannersFinalRhsTerms(const std::vector<int>& lambda, const std::vector<int>& r) {
    requireFourRow(lambda);
    int n = static_cast<int>(r.size());
    int l4 = lambda[3], l2 = lambda[1];
    std::vector<QTFactored> out;
    for (int l = 0; l <= l4; ++l) {
        QTFactored ratio = fFun(l4 - l, 0) * fFun(l2 - l, 2) / (fFun(l4, 0) * fFun(l2, 2));
        forEachTuple(n, l, true, [&](const std::vector<int>& ls, int) {
            QTFactored w = ratio;
            for (int i = 0; i < n; ++i) w *= fFun(ls[i], 0) * fFun(ls[i] + r[i], 0);
            out.push_back(w);
        });
    }
    return out;
}

namespace {

// Numerator of sum(lhs) - sum(rhs) over the common denominator that takes each
// binomial to its largest power among the terms.
// lhs - rhs over a common denominator is an integer polynomial N once the
// coefficients are scaled by their common denominator. Each term contributes
// coefficients of absolute value at most |c| 2^K (K binomial factors), so if N
// vanishes modulo moduli whose lcm exceeds the sum of those bounds, N = 0.
// A nonzero residue for any modulus proves N != 0.
struct ClearedTerm {
    mpz_class c;
    int q0 = 0, t0 = 0;
    std::vector<FactorKey> binomials;  // with repetition
};

bool clearedSumIsZero(const std::vector<QTFactored>& lhs, const std::vector<QTFactored>& rhs) {
    std::map<FactorKey, int> den;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& x : *side)
            for (const auto& [k, e] : x.factors())
                if (e < 0) den[k] = std::max(den[k], -e);
    mpz_class scale = 1;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& x : *side)
            if (!x.isZero()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.coeff().get_den_mpz_t());

    std::vector<ClearedTerm> terms;
    int qmin = 0, tmin = 0, qmax = 0, tmax = 0;
    bool first = true;
    mpz_class bound = 0;
    for (const auto* side : {&lhs, &rhs})
        for (const auto& x : *side) {
            if (x.isZero()) continue;
            ClearedTerm ct;
            mpq_class c = x.coeff() * scale;
            ct.c = c.get_num();
            if (side == &rhs) ct.c = -ct.c;
            ct.q0 = x.qExp();
            ct.t0 = x.tExp();
            std::map<FactorKey, int> need = den;
            for (const auto& [k, e] : x.factors()) need[k] += e;
            int qd = 0, td = 0;
            for (const auto& [k, e] : need) {
                if (k.first < 0 || k.second < 0) throw std::logic_error("clearedSumIsZero: negative binomial exponent");
                for (int i = 0; i < e; ++i) ct.binomials.push_back(k);
                qd += k.first * e;
                td += k.second * e;
            }
            if (first) {
                qmin = ct.q0, tmin = ct.t0, qmax = ct.q0 + qd, tmax = ct.t0 + td;
                first = false;
            }
            qmin = std::min(qmin, ct.q0);
            tmin = std::min(tmin, ct.t0);
            qmax = std::max(qmax, ct.q0 + qd);
            tmax = std::max(tmax, ct.t0 + td);
            bound += abs(ct.c) << static_cast<mp_bitcnt_t>(ct.binomials.size());
            terms.push_back(std::move(ct));
        }
    if (terms.empty()) return true;

    const int W = tmax - tmin + 1;
    const std::size_t cells = static_cast<std::size_t>(qmax - qmin + 1) * W;
    std::vector<std::uint64_t> total(cells), work(cells);
    mpz_class modulus = (mpz_class(1) << 62) - 1, covered = 1;
    while (covered <= bound) {
        mpz_nextprime(modulus.get_mpz_t(), modulus.get_mpz_t());
        const std::uint64_t m = modulus.get_ui();
        std::fill(total.begin(), total.end(), 0);
        for (const auto& ct : terms) {
            // work holds the term's polynomial inside its own box [q0, q0+qd] x [t0, t0+td].
            int qd = 0, td = 0;
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), ct.c.get_mpz_t(), modulus.get_mpz_t());
            work[0] = r.get_ui();
            for (auto [a, b] : ct.binomials) {
                int nq = qd + a, nt = td + b;
                // Grow the box in place (row stride W), newest cells zeroed, then p -= shift(p).
                for (int i = nq; i >= 0; --i)
                    for (int j = nt; j >= 0; --j) {
                        std::uint64_t v = i <= qd && j <= td ? work[i * W + j] : 0;
                        int si = i - a, sj = j - b;
                        if (si >= 0 && sj >= 0 && si <= qd && sj <= td) {
                            std::uint64_t u = work[si * W + sj];
                            v = v >= u ? v - u : v + (m - u);
                        }
                        work[i * W + j] = v;
                    }
                qd = nq;
                td = nt;
            }
            const std::size_t off = static_cast<std::size_t>(ct.q0 - qmin) * W + (ct.t0 - tmin);
            for (int i = 0; i <= qd; ++i)
                for (int j = 0; j <= td; ++j) {
                    std::uint64_t& dst = total[off + static_cast<std::size_t>(i) * W + j];
                    std::uint64_t v = dst + work[i * W + j];
                    dst = v >= m ? v - m : v;
                }
        }
        if (std::any_of(total.begin(), total.end(), [](std::uint64_t v) { return v != 0; })) return false;
        covered *= modulus;
    }
    return true;
}

}  // namespace

VerificationReport compareSums(const std::vector<QTFactored>& lhs, const std::vector<QTFactored>& rhs, Mode mode,
                               const std::vector<EvalPoint>& points) {
    VerificationReport rep;
    rep.mode = mode;
    rep.cases = 1;
    if (mode == Mode::Exact) {
        if (!clearedSumIsZero(lhs, rhs)) {
            RatQT a, b;
            for (const auto& x : lhs) a += RatQT(x);
            for (const auto& x : rhs) b += RatQT(x);
            rep.fail({"sum", a.reduced().toString(), b.reduced().toString()});
        }
        return rep;
    }
    if (points.empty()) throw std::invalid_argument("compareSums: eval mode needs points");
    rep.points = points;
    for (const auto& p : points) {
        mpq_class a = 0, b = 0;
        for (const auto& x : lhs) a += evaluate(x, p);
        for (const auto& x : rhs) b += evaluate(x, p);
        if (a != b) {
            rep.fail({"sum at " + p.toString(), a.get_str(), b.get_str()});
            break;
        }
    }
    return rep;
}

namespace {

VerificationReport finish(VerificationReport rep, const char* check, nlohmann::json params, const Stopwatch& sw) {
    rep.check = check;
    rep.params = std::move(params);
    rep.elapsedMs = sw.ms();
    return rep;
}

}  // namespace

VerificationReport lemmaCheck(int m, int k0, int rho0, int theta0, int gamma, Mode mode,
                              const std::vector<EvalPoint>& points) {
    Stopwatch sw;
    auto rep = compareSums(lemmaLhsTerms(m, k0, rho0, theta0, gamma), lemmaRhsTerms(m, k0, rho0, theta0, gamma), mode,
                           points);
    return finish(rep, "lemma", {{"m", m}, {"k0", k0}, {"rho0", rho0}, {"theta0", theta0}, {"gamma", gamma}}, sw);
}

VerificationReport generalCheck(int m, int k0, int rho0, int theta0, const std::vector<int>& gamma, Mode mode,
                                const std::vector<EvalPoint>& points) {
    Stopwatch sw;
    auto rep = compareSums(generalLhsTerms(m, k0, rho0, theta0, gamma),
                           generalRhsTerms(m, k0, rho0, theta0, gamma), mode, points);
    return finish(rep, "general",
                  {{"m", m}, {"k0", k0}, {"rho0", rho0}, {"theta0", theta0}, {"gamma", gamma}}, sw);
}

VerificationReport birdsFinalCheck(int rho0, int theta0, const std::vector<int>& r, Mode mode,
                                   const std::vector<EvalPoint>& points) {
    Stopwatch sw;
    auto rep = compareSums(birdsFinalLhsTerms(rho0, theta0, r), birdsFinalRhsTerms(rho0, theta0, r), mode, points);
    return finish(rep, "birds-final", {{"rho0", rho0}, {"theta0", theta0}, {"r", r}}, sw);
}

VerificationReport bannersFinalCheck(const std::vector<int>& lambda, const std::vector<int>& r, Mode mode,
                                     const std::vector<EvalPoint>& points) {
    Stopwatch sw;
    auto rep = compareSums(bannersFinalLhsTerms(lambda, r), bannersFinalRhsTerms(lambda, r), mode, points);
    return finish(rep, "banners-final", {{"lambda", lambda}, {"r", r}}, sw);
}

VerificationReport birdsRatioCheck(int maxBound) {
    Stopwatch sw;
    VerificationReport rep;
    for (int theta0 = 0; theta0 <= maxBound; ++theta0)
        for (int rho0 = 0; rho0 <= theta0; ++rho0) {
            QTFactored b = bLambda(Partition({theta0, rho0}));
            QTFactored closed = fFun(theta0 - rho0, 0) * fFun(theta0, 1) / fFun(theta0 - rho0, 1) * fFun(rho0, 0);
            ++rep.cases;
            if (!qtEquals(b, closed, Mode::Exact))
                rep.fail({"b_(" + std::to_string(theta0) + "," + std::to_string(rho0) + ")", b.toString(),
                          closed.toString()});
            for (int l = 0; l <= rho0; ++l) {
                QTFactored lhs = bLambda(Partition({theta0 - l, rho0 - l})) / b;
                QTFactored rhs = fFun(rho0 - l, 0) * fFun(theta0 - l, 1) / (fFun(rho0, 0) * fFun(theta0, 1));
                ++rep.cases;
                if (!qtEquals(lhs, rhs, Mode::Exact))
                    rep.fail({"l=" + std::to_string(l) + " (" + std::to_string(theta0) + "," + std::to_string(rho0) +
                                  ")",
                              lhs.toString(), rhs.toString()});
            }
        }
    return finish(rep, "birds-ratio", {{"maxBound", maxBound}}, sw);
}

VerificationReport bannersRatioCheck(int maxBound) {
    Stopwatch sw;
    VerificationReport rep;
    for (const auto& lam : partitionsUpTo(4 * maxBound, 4)) {
        if (lam.length() > 0 && lam.part(1) > maxBound) continue;
        std::vector<int> v(4, 0);
        for (int i = 1; i <= lam.length(); ++i) v[i - 1] = lam.part(i);
        QTFactored b = bEl(lam);
        for (int l = 0; l <= v[3]; ++l) {
            QTFactored lhs = bEl(Partition({v[0] - l, v[1] - l, v[2] - l, v[3] - l})) / b;
            QTFactored rhs = fFun(v[3] - l, 0) * fFun(v[1] - l, 2) / (fFun(v[3], 0) * fFun(v[1], 2));
            ++rep.cases;
            if (!qtEquals(lhs, rhs, Mode::Exact))
                rep.fail({"l=" + std::to_string(l) + " " + lam.toString(), lhs.toString(), rhs.toString()});
        }
    }
    return finish(rep, "banners-ratio", {{"maxBound", maxBound}}, sw);
}

VerificationReport lemmaSweep(int maxM, int maxBound, int maxGamma) {
    Stopwatch sw;
    VerificationReport rep;
    for (int m = 0; m <= maxM; ++m)
        for (int theta0 = 0; theta0 <= maxBound; ++theta0)
            for (int rho0 = 0; rho0 <= theta0; ++rho0)
                for (int k0 = 0; k0 <= rho0; ++k0)
                    for (int g = 0; g <= maxGamma; ++g) rep.absorb(lemmaCheck(m, k0, rho0, theta0, g));
    return finish(rep, "lemma", {{"maxM", maxM}, {"maxBound", maxBound}, {"maxGamma", maxGamma}}, sw);
}

VerificationReport generalSweep(int maxN, int maxM, int maxBound) {
    Stopwatch sw;
    VerificationReport rep;
    for (int n = 0; n <= maxN; ++n)
        for (int m = 0; m <= maxM; ++m)
            for (int theta0 = 0; theta0 <= maxBound; ++theta0)
                for (int rho0 = 0; rho0 <= theta0; ++rho0)
                    for (int k0 = 0; k0 <= rho0; ++k0)
                        forEachTuple(n, n * maxBound, false, [&](const std::vector<int>& g, int) {
                            for (int x : g)
                                if (x > maxBound) return;
                            rep.absorb(generalCheck(m, k0, rho0, theta0, g));
                        });
    return finish(rep, "general", {{"maxN", maxN}, {"maxM", maxM}, {"maxBound", maxBound}}, sw);
}

VerificationReport birdsFinalSweep(int maxF, int maxBound) {
    Stopwatch sw;
    VerificationReport rep;
    for (int f = 1; f <= maxF; ++f)
        for (int theta0 = 0; theta0 <= maxBound; ++theta0)
            for (int rho0 = 0; rho0 <= theta0; ++rho0)
                forEachTuple(f, f * maxBound, false, [&](const std::vector<int>& r, int) {
                    for (int x : r)
                        if (x > maxBound) return;
                    rep.absorb(birdsFinalCheck(rho0, theta0, r));
                });
    return finish(rep, "birds-final", {{"maxF", maxF}, {"maxBound", maxBound}}, sw);
}

VerificationReport bannersFinalSweep(int maxF, int maxBound) {
    Stopwatch sw;
    VerificationReport rep;
    for (int f = 1; f <= maxF; ++f)
        for (const auto& lam : partitionsUpTo(4 * maxBound, 4)) {
            if (lam.length() > 0 && lam.part(1) > maxBound) continue;
            std::vector<int> v(4, 0);
            for (int i = 1; i <= lam.length(); ++i) v[i - 1] = lam.part(i);
            forEachTuple(f - 1, (f - 1) * maxBound, false, [&](const std::vector<int>& r, int) {
                for (int x : r)
                    if (x > maxBound) return;
                rep.absorb(bannersFinalCheck(v, r));
            });
        }
    return finish(rep, "banners-final", {{"maxF", maxF}, {"maxBound", maxBound}}, sw);
}

}  // namespace qthook
