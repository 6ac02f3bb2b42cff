#include "qthook/macdonald.hpp"

#include <random>
#include <set>

namespace qthook {

Exps partitionExps(const Partition& p, int n) {
    if (p.length() > n) throw std::invalid_argument("partition longer than the variable count");
    Exps e(n, 0);
    for (int i = 0; i < p.length(); ++i) e[i] = p.parts()[i];
    return e;
}

Partition exponentShape(const Exps& e) {
    std::vector<int> parts;
    for (int x : e) {
        if (x < 0) throw std::invalid_argument("exponentShape: negative exponent");
        if (x > 0) parts.push_back(x);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

std::vector<int> slotRange(int begin, int count) {
    std::vector<int> out(count);
    for (int i = 0; i < count; ++i) out[i] = begin + i;
    return out;
}

std::vector<std::string> numberedVars(const std::string& stem, int count) {
    std::vector<std::string> out;
    for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

namespace {

// Number of ways to drop the parts of rho into bins with sums mu (coefficient
// of x^mu in p_rho).
long powerSumMonomialCount(const std::vector<int>& rho, std::size_t k, std::vector<int>& room) {
    if (k == rho.size()) return std::all_of(room.begin(), room.end(), [](int r) { return r == 0; }) ? 1 : 0;
    long total = 0;
    for (auto& r : room) {
        if (r < rho[k]) continue;
        r -= rho[k];
        total += powerSumMonomialCount(rho, k + 1, room);
        r += rho[k];
    }
    return total;
}

std::vector<std::vector<mpq_class>> invert(std::vector<std::vector<mpq_class>> a) {
    std::size_t n = a.size();
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        mpq_class scale = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

mpq_class determinant(std::vector<std::vector<mpq_class>> a) {
    std::size_t n = a.size();
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(a[col], a[pivot]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            mpq_class f = a[r][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
        }
    }
    return det;
}

// Determinant by expansion over column subsets: O(k 2^k) products.
BiPoly subsetDeterminant(const std::vector<std::vector<BiPoly>>& a) {
    std::size_t k = a.size();
    if (k == 0) return BiPoly(1);
    std::vector<BiPoly> dp(std::size_t{1} << k);
    dp[0] = BiPoly(1);
    for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
        if (dp[mask].isZero()) continue;
        int row = __builtin_popcountll(mask);
        for (std::size_t j = 0; j < k; ++j) {
            if (mask & (std::size_t{1} << j)) continue;
            if (a[row][j].isZero()) continue;
            int above = __builtin_popcountll(mask >> (j + 1));
            BiPoly term = a[row][j] * dp[mask];
            dp[mask | (std::size_t{1} << j)] += above % 2 ? -term : term;
        }
    }
    return dp.back();
}

}  // namespace

std::vector<std::vector<mpq_class>> monomialInPowerSums(int d) {
    auto parts = partitionsOf(d);
    std::size_t n = parts.size();
    // rows rho: p_rho in the monomial basis.
    std::vector<std::vector<mpq_class>> p2m(n, std::vector<mpq_class>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t m = 0; m < n; ++m) {
            std::vector<int> room = parts[m].parts();
            p2m[r][m] = powerSumMonomialCount(parts[r].parts(), 0, room);
        }
    // p = p2m m, so row mu of the inverse expresses m_mu in power sums.
    return invert(p2m);
}

mpq_class zee(const Partition& rho) {
    std::map<int, int> mult;
    for (int p : rho.parts()) ++mult[p];
    mpz_class z = 1;
    for (const auto& [part, m] : mult) {
        for (int k = 0; k < m; ++k) z *= part;
        for (int k = 2; k <= m; ++k) z *= k;
    }
    return mpq_class(z);
}

QTFactored powerSumNorm(const Partition& rho) {
    QTFactored x(zee(rho));
    for (int p : rho.parts()) x *= QTFactored::factor(p, 0) / QTFactored::factor(0, p);
    return x;
}

GramResult gramP(const Partition& lambda, int n) {
    int d = lambda.weight();
    if (d > kGramBudget) throw std::invalid_argument("gramP: |lambda| exceeds the oracle budget");
    if (lambda.length() > n) throw std::invalid_argument("gramP: length(lambda) > n");
    auto parts = partitionsOf(d);
    std::size_t np = parts.size();
    auto m2p = monomialInPowerSums(d);

    // Clear the (1 - t^k) denominators of the power-sum norms with a common multiple.
    std::map<int, int> maxMult;
    for (const auto& rho : parts) {
        std::map<int, int> mult;
        for (int p : rho.parts()) ++mult[p];
        for (const auto& [p, m] : mult) maxMult[p] = std::max(maxMult[p], m);
    }
    std::vector<BiPoly> weight(np);
    for (std::size_t r = 0; r < np; ++r) {
        std::map<int, int> mult;
        BiPoly w(zee(parts[r]));
        for (int p : parts[r].parts()) {
            ++mult[p];
            w *= BiPoly::binomial(p, 0);
        }
        for (const auto& [p, m] : maxMult) w *= BiPoly::binomial(0, p).pow(m - mult[p]);
        weight[r] = w;
    }
    auto gram = [&](std::size_t a, std::size_t b) {
        BiPoly g;
        for (std::size_t r = 0; r < np; ++r) {
            mpq_class c = m2p[a][r] * m2p[b][r];
            if (c != 0) g += weight[r].scaled(c);
        }
        return g;
    };

    std::size_t top = std::find(parts.begin(), parts.end(), lambda) - parts.begin();
    std::vector<std::size_t> lower;
    for (std::size_t i = 0; i < np; ++i)
        if (parts[i] < lambda) lower.push_back(i);
    std::size_t k = lower.size();
    std::vector<std::vector<BiPoly>> a(k, std::vector<BiPoly>(k));
    std::vector<BiPoly> rhs(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) a[i][j] = gram(lower[j], lower[i]);
        rhs[i] = -gram(top, lower[i]);
    }

    GramResult res;
    res.lambda = lambda;
    res.n = n;
    res.denominator = subsetDeterminant(a);
    if (res.denominator.isZero()) throw std::logic_error("gramP: singular Gram system");
    res.numerators[lambda] = res.denominator;
    for (std::size_t j = 0; j < k; ++j) {
        if (parts[lower[j]].length() > n) continue;
        auto aj = a;
        for (std::size_t i = 0; i < k; ++i) aj[i][j] = rhs[i];
        BiPoly num = subsetDeterminant(aj);
        if (!num.isZero()) res.numerators[parts[lower[j]]] = num;
    }
    return res;
}

std::string warnaarName(WarnaarVariant v) {
    switch (v) {
        case WarnaarVariant::OddArm: return "oa";
        case WarnaarVariant::EvenLeg: return "el";
        case WarnaarVariant::Odd: return "odd";
        case WarnaarVariant::Even: return "even";
    }
    return "?";
}

WarnaarVariant parseWarnaar(const std::string& name) {
    for (auto v : {WarnaarVariant::OddArm, WarnaarVariant::EvenLeg, WarnaarVariant::Odd, WarnaarVariant::Even})
        if (warnaarName(v) == name) return v;
    throw std::invalid_argument("unknown Warnaar variant " + name);
}

int warnaarWExponent(WarnaarVariant v, const Partition& lambda) {
    switch (v) {
        case WarnaarVariant::OddArm: return lambda.oddRows();
        case WarnaarVariant::EvenLeg: return lambda.oddColumns();
        case WarnaarVariant::Odd: return (lambda.weight() + lambda.oddColumns()) / 2;
        case WarnaarVariant::Even: return (lambda.weight() - lambda.oddColumns()) / 2;
    }
    return 0;
}

QTFactored warnaarCoefficient(WarnaarVariant v, const Partition& lambda) {
    return v == WarnaarVariant::OddArm ? bOa(lambda) : bEl(lambda);
}

QTFactored oddArmDiagonalCoeff(int k) {
    QTFactored c(1);
    for (int i = 0; i < k; ++i) c *= QTFactored::factor(2 * i + 1, 1) / QTFactored::factor(2 * i + 2, 0);
    return c;
}

RatQT scalarProductPQ(Macdonald<ExactRing>& M, const Partition& lambda, const Partition& mu) {
    int d = lambda.weight();
    if (mu.weight() != d) return RatQT();
    int n = std::max(d, 1);
    auto parts = partitionsOf(d);
    auto m2p = monomialInPowerSums(d);
    auto powerCoords = [&](const Partition& nu) {
        const auto& p = M.P(nu, n);
        std::vector<RatQT> coords(parts.size());
        for (std::size_t a = 0; a < parts.size(); ++a) {
            auto it = p.find(partitionExps(parts[a], n));
            if (it == p.end()) continue;
            for (std::size_t r = 0; r < parts.size(); ++r)
                if (m2p[a][r] != 0) coords[r] += it->second * RatQT(m2p[a][r]);
        }
        return coords;
    };
    auto a = powerCoords(lambda), b = powerCoords(mu);
    RatQT sum;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (a[r].isZero() || b[r].isZero()) continue;
        sum += (a[r] * b[r]).times(powerSumNorm(parts[r]));
    }
    return sum.times(bLambda(mu));
}

VerificationReport orthonormalityCheck(Macdonald<ExactRing>& M, int maxWeight, int n) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "orthonormality";
    rep.params = {{"maxWeight", maxWeight}, {"n", n}};
    if (n < maxWeight) throw std::invalid_argument("orthonormalityCheck: need n >= maxWeight");
    for (int d = 0; d <= maxWeight; ++d)
        for (const auto& lam : partitionsOf(d))
            for (const auto& mu : partitionsOf(d)) {
                ++rep.cases;
                RatQT v = scalarProductPQ(M, lam, mu);
                RatQT expected = lam == mu ? RatQT(mpq_class(1)) : RatQT();
                if (!(v == expected)) {
                    rep.fail({"<P_" + lam.toString() + ",Q_" + mu.toString() + ">", v.toString(),
                              expected.toString()});
                    rep.elapsedMs = sw.ms();
                    return rep;
                }
            }
    rep.elapsedMs = sw.ms();
    return rep;
}

VerificationReport gramCheck(Macdonald<ExactRing>& M, const Partition& lambda, int n) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "gram";
    rep.params = {{"lambda", lambda.toString()}, {"n", n}};
    GramResult g = gramP(lambda, n);
    const auto& p = M.P(lambda, n);
    if (!isSymmetric(p)) rep.fail({"symmetry", "skewP not symmetric", ""});
    VarSet vars(numberedVars("x", n));
    for (const auto& mu : partitionsOf(lambda.weight(), n)) {
        ++rep.cases;
        Exps e = partitionExps(mu, n);
        auto it = p.find(e);
        RatQT c = it == p.end() ? RatQT() : it->second;
        BiPoly num = g.numerators.count(mu) ? g.numerators.at(mu) : BiPoly();
        if (!(c.num() * g.denominator == num * c.denominatorPoly())) {
            rep.fail({vars.format(e), c.toString(), "(" + num.toString() + ")/(" + g.denominator.toString() + ")"});
            break;
        }
    }
    rep.elapsedMs = sw.ms();
    return rep;
}

VerificationReport schurCheck(const Partition& lambda, int n, std::uint64_t seed, int samples) {
    VerificationReport rep;
    rep.check = "schur-degeneration";
    rep.params = {{"lambda", lambda.toString()}, {"n", n}};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(2, 7), xs(-9, 9);
    int a = digit(rng), b = digit(rng);
    if (a == b) b = a == 7 ? 2 : a + 1;
    EvalPoint pt{mpq_class(a, b), mpq_class(a, b)};
    pt.q0.canonicalize();
    pt.t0.canonicalize();
    EvalRing ring(pt);
    rep.mode = Mode::Eval;
    rep.points = {pt};
    Macdonald<EvalRing> M(ring);
    const auto& p = M.P(lambda, n);
    for (int s = 0; s < samples; ++s) {
        std::vector<mpq_class> x(n);
        for (int i = 0; i < n; ++i) {
            mpq_class v;
            do {
                v = mpq_class(xs(rng), digit(rng));
                v.canonicalize();
            } while (v == 0 || std::find(x.begin(), x.begin() + i, v) != x.begin() + i);
            x[i] = v;
        }
        mpq_class value = 0;
        for (const auto& [e, c] : p) {
            mpq_class m = c;
            for (int i = 0; i < n; ++i) m *= rationalPow(x[i], e[i]);
            value += m;
        }
        std::vector<std::vector<mpq_class>> num(n, std::vector<mpq_class>(n)), den = num;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                num[i][j] = rationalPow(x[i], lambda.part(j + 1) + n - 1 - j);
                den[i][j] = rationalPow(x[i], n - 1 - j);
            }
        mpq_class schur = determinant(num) / determinant(den);
        ++rep.cases;
        if (value != schur) {
            rep.fail({"sample " + std::to_string(s), value.get_str(), schur.get_str()});
            break;
        }
    }
    return rep;
}

}  // namespace qthook
