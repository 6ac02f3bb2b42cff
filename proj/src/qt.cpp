#include "qthook/qt.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace qthook {

QTFactored::QTFactored(const mpq_class& c) : coeff_(c) {}

QTFactored QTFactored::monomial(const mpq_class& c, int qe, int te) {
    QTFactored x(c);
    if (c != 0) {
        x.qExp_ = qe;
        x.tExp_ = te;
    }
    return x;
}

QTFactored QTFactored::factor(int a, int b, int e) {
    if (a < 0 || b < 0 || (a == 0 && b == 0))
        throw std::invalid_argument("factor (1 - q^a t^b) needs a,b >= 0, not both zero");
    QTFactored x;
    if (e != 0) x.factors_[{a, b}] = e;
    return x;
}

QTFactored QTFactored::operator*(const QTFactored& o) const {
    if (isZero() || o.isZero()) return zero();
    QTFactored r = *this;
    r.coeff_ *= o.coeff_;
    r.qExp_ += o.qExp_;
    r.tExp_ += o.tExp_;
    for (const auto& [key, e] : o.factors_) {
        int& slot = r.factors_[key];
        slot += e;
        if (slot == 0) r.factors_.erase(key);
    }
    return r;
}

QTFactored QTFactored::inverse() const {
    if (isZero()) throw std::domain_error("QTFactored: division by zero");
    QTFactored r;
    r.coeff_ = 1 / coeff_;
    r.qExp_ = -qExp_;
    r.tExp_ = -tExp_;
    for (const auto& [key, e] : factors_) r.factors_[key] = -e;
    return r;
}

QTFactored QTFactored::operator/(const QTFactored& o) const { return *this * o.inverse(); }

QTFactored QTFactored::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    if (isZero()) return e == 0 ? QTFactored(1) : zero();
    QTFactored r;
    r.coeff_ = rationalPow(coeff_, e);
    r.qExp_ = qExp_ * e;
    r.tExp_ = tExp_ * e;
    if (e != 0)
        for (const auto& [key, x] : factors_) r.factors_[key] = x * e;
    return r;
}

BiPoly QTFactored::numerator() const {
    BiPoly p = BiPoly::monomial(coeff_, qExp_, tExp_);
    for (const auto& [key, e] : factors_)
        if (e > 0) p = p * BiPoly::binomial(key.first, key.second).pow(e);
    return p;
}

BiPoly QTFactored::denominator() const {
    BiPoly p(1);
    for (const auto& [key, e] : factors_)
        if (e < 0) p = p * BiPoly::binomial(key.first, key.second).pow(-e);
    return p;
}

bool QTFactored::sameRepresentation(const QTFactored& o) const {
    return coeff_ == o.coeff_ && qExp_ == o.qExp_ && tExp_ == o.tExp_ && factors_ == o.factors_;
}

std::string QTFactored::toString() const {
    if (isZero()) return "0";
    std::string num = coeff_.get_str(), den;
    auto mono = [](int qe, int te) {
        std::string s;
        if (qe) s += "*q" + (qe == 1 ? std::string() : "^" + std::to_string(qe));
        if (te) s += "*t" + (te == 1 ? std::string() : "^" + std::to_string(te));
        return s;
    };
    num += mono(qExp_, tExp_);
    for (const auto& [key, e] : factors_) {
        std::string f = "(1-" + mono(key.first, key.second).substr(1) + ")";
        if (std::abs(e) != 1) f += "^" + std::to_string(std::abs(e));
        (e > 0 ? num : den) += "*" + f;
    }
    return den.empty() ? num : num + "/(" + den.substr(1) + ")";
}

mpq_class evaluate(const QTFactored& x, const EvalPoint& p) {
    if (x.isZero()) return 0;
    mpq_class v = x.coeff() * rationalPow(p.q0, x.qExp()) * rationalPow(p.t0, x.tExp());
    for (const auto& [key, e] : x.factors()) {
        mpq_class f = 1 - rationalPow(p.q0, key.first) * rationalPow(p.t0, key.second);
        if (f == 0) {
            if (e < 0) throw VanishingFactor("binomial vanishes at " + p.toString());
            return 0;
        }
        v *= rationalPow(f, e);
    }
    return v;
}

namespace {

std::array<int, 4> primeExponents(const mpq_class& x) {
    static const std::array<int, 4> primes{2, 3, 5, 7};
    std::array<int, 4> v{};
    mpz_class num = x.get_num(), den = x.get_den();
    for (std::size_t i = 0; i < primes.size(); ++i) {
        while (num % primes[i] == 0) {
            num /= primes[i];
            ++v[i];
        }
        while (den % primes[i] == 0) {
            den /= primes[i];
            --v[i];
        }
    }
    return v;
}

bool dependent(const mpq_class& a, const mpq_class& b) {
    auto u = primeExponents(a), v = primeExponents(b);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] - u[j] * v[i] != 0) return false;
    return true;
}

}  // namespace

std::vector<EvalPoint> samplePoints(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> digit(2, 7);
    auto draw = [&] {
        while (true) {
            int a = digit(rng), b = digit(rng);
            if (a != b) return mpq_class(a, b);
        }
    };
    std::vector<EvalPoint> out;
    while (static_cast<int>(out.size()) < count) {
        EvalPoint p{draw(), draw()};
        p.q0.canonicalize();
        p.t0.canonicalize();
        if (p.q0 == p.t0 || dependent(p.q0, p.t0)) continue;
        out.push_back(p);
    }
    return out;
}

std::string modeName(Mode m) { return m == Mode::Exact ? "exact" : "eval"; }

bool qtEquals(const QTFactored& x, const QTFactored& y, Mode mode, const std::vector<EvalPoint>& points) {
    if (mode == Mode::Exact) {
        if (x.isZero() || y.isZero()) return x.isZero() && y.isZero();
        return x.numerator() * y.denominator() == y.numerator() * x.denominator();
    }
    if (points.empty()) throw std::invalid_argument("eval mode needs at least one point");
    for (const auto& p : points)
        if (evaluate(x, p) != evaluate(y, p)) return false;
    return true;
}

QTFactored fFun(int n, int m) {
    if (m < 0) throw std::invalid_argument("fFun: m must be nonnegative");
    if (n < 0) return QTFactored::zero();
    QTFactored r;
    for (int k = 0; k < n; ++k) {
        r *= QTFactored::factor(k, m + 1, 1);
        r *= QTFactored::factor(k + 1, m, -1);
    }
    return r;
}

namespace {

QTFactored cellFactor(int a, int l) {
    return QTFactored::factor(a, l + 1, 1) * QTFactored::factor(a + 1, l, -1);
}

template <class Keep>
QTFactored cellProduct(const Partition& lambda, Keep keep) {
    QTFactored r;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            int a = lambda.arm(i, j), l = lambda.leg(i, j);
            if (keep(a, l)) r *= cellFactor(a, l);
        }
    return r;
}

template <class Keep>
QTFactored fProduct(const Partition& lambda, Keep keepM) {
    QTFactored r;
    int len = lambda.length();
    for (int i = 1; i <= len; ++i)
        for (int m = 0; i + m <= len; ++m) {
            if (!keepM(m)) continue;
            r *= fFun(lambda.part(i) - lambda.part(i + m + 1), m);
            r /= fFun(lambda.part(i) - lambda.part(i + m), m);
        }
    return r;
}

}  // namespace

QTFactored bLambda(const Partition& lambda) {
    return cellProduct(lambda, [](int, int) { return true; });
}

QTFactored bLambdaFProduct(const Partition& lambda) {
    return fProduct(lambda, [](int) { return true; });
}

QTFactored bEl(const Partition& lambda) {
    return cellProduct(lambda, [](int, int l) { return l % 2 == 0; });
}

QTFactored bElFProduct(const Partition& lambda) {
    return fProduct(lambda, [](int m) { return m % 2 == 0; });
}

QTFactored bOa(const Partition& lambda) {
    return cellProduct(lambda, [](int a, int) { return a % 2 == 1; });
}

QTFactored bOddLeg(const Partition& lambda) {
    return cellProduct(lambda, [](int, int l) { return l % 2 == 1; });
}

QTFactored phiSkew(const Partition& lambda, const Partition& mu) {
    if (!isHorizontalStrip(lambda, mu)) return QTFactored::zero();
    QTFactored r;
    int len = lambda.length();
    for (int i = 1; i <= len; ++i)
        for (int j = i; j <= len; ++j) {
            int s = j - i;
            r *= fFun(lambda.part(i) - mu.part(j), s) * fFun(mu.part(i) - lambda.part(j + 1), s);
            r /= fFun(lambda.part(i) - lambda.part(j), s) * fFun(mu.part(i) - mu.part(j + 1), s);
        }
    return r;
}

QTFactored psiSkew(const Partition& lambda, const Partition& mu) {
    if (!isHorizontalStrip(lambda, mu)) return QTFactored::zero();
    QTFactored r;
    int len = mu.length();
    for (int i = 1; i <= len; ++i)
        for (int j = i; j <= len; ++j) {
            int s = j - i;
            r *= fFun(lambda.part(i) - mu.part(j), s) * fFun(mu.part(i) - lambda.part(j + 1), s);
            r /= fFun(mu.part(i) - mu.part(j), s) * fFun(lambda.part(i) - lambda.part(j + 1), s);
        }
    return r;
}

}  // namespace qthook
