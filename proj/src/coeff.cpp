#include "qthook/coeff.hpp"

#include <algorithm>

namespace qthook {

namespace {

constexpr std::size_t kReduceThreshold = 64;

BiPoly binomialPower(const FactorKey& key, int e) {
    return BiPoly::binomial(key.first, key.second).pow(e);
}

}  // namespace

RatQT::RatQT(const QTFactored& x) {
    if (x.isZero()) return;
    num_ = x.numerator();
    for (const auto& [key, e] : x.factors())
        if (e < 0) den_[key] = -e;
}

RatQT::RatQT(BiPoly num, std::map<FactorKey, int> den) : num_(std::move(num)), den_(std::move(den)) {
    std::erase_if(den_, [](const auto& kv) { return kv.second == 0; });
    if (num_.isZero()) den_.clear();
}

BiPoly RatQT::denominatorPoly() const {
    BiPoly p(1);
    for (const auto& [key, e] : den_) p = p * binomialPower(key, e);
    return p;
}

RatQT RatQT::operator+(const RatQT& o) const {
    if (o.isZero()) return *this;
    if (isZero()) return o;
    if (den_ == o.den_) {
        RatQT r(num_ + o.num_, den_);
        r.maybeReduce();
        return r;
    }
    std::map<FactorKey, int> lcm = den_;
    for (const auto& [key, e] : o.den_) lcm[key] = std::max(lcm[key], e);
    auto lifted = [&](const RatQT& x) {
        BiPoly p = x.num_;
        for (const auto& [key, e] : lcm) {
            auto it = x.den_.find(key);
            int have = it == x.den_.end() ? 0 : it->second;
            if (e > have) p = p * binomialPower(key, e - have);
        }
        return p;
    };
    BiPoly num = lifted(*this) + lifted(o);
    RatQT r(std::move(num), std::move(lcm));
    r.maybeReduce();
    return r;
}

RatQT RatQT::operator-() const {
    RatQT r = *this;
    r.num_ = -r.num_;
    return r;
}

RatQT RatQT::operator-(const RatQT& o) const { return *this + (-o); }

RatQT RatQT::operator*(const RatQT& o) const {
    if (isZero() || o.isZero()) return {};
    std::map<FactorKey, int> den = den_;
    for (const auto& [key, e] : o.den_) den[key] += e;
    RatQT r(num_ * o.num_, std::move(den));
    r.maybeReduce();
    return r;
}

RatQT RatQT::times(const QTFactored& x) const {
    if (isZero() || x.isZero()) return {};
    BiPoly num = num_ * BiPoly::monomial(x.coeff(), x.qExp(), x.tExp());
    std::map<FactorKey, int> den = den_;
    for (const auto& [key, e] : x.factors()) {
        if (e < 0) {
            den[key] -= e;
            continue;
        }
        int cancel = 0;
        auto it = den.find(key);
        if (it != den.end()) {
            cancel = std::min(it->second, e);
            it->second -= cancel;
        }
        if (e > cancel) num = num * binomialPower(key, e - cancel);
    }
    RatQT r(std::move(num), std::move(den));
    r.maybeReduce();
    return r;
}

RatQT RatQT::reduced() const {
    RatQT r = *this;
    for (auto& [key, e] : r.den_) {
        BiPoly quotient;
        while (e > 0 && r.num_.divideByBinomial(key.first, key.second, quotient)) {
            r.num_ = std::move(quotient);
            --e;
        }
    }
    std::erase_if(r.den_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

void RatQT::maybeReduce() {
    if (num_.size() > kReduceThreshold && !den_.empty()) *this = reduced();
}

mpq_class RatQT::evaluate(const EvalPoint& p) const {
    mpq_class d = denominatorPoly().evaluate(p.q0, p.t0);
    if (d == 0) throw VanishingFactor("denominator vanishes at " + p.toString());
    return num_.evaluate(p.q0, p.t0) / d;
}

std::string RatQT::toString() const {
    if (den_.empty()) return num_.toString();
    std::string den;
    for (const auto& [key, e] : den_) {
        if (!den.empty()) den += "*";
        den += "(" + BiPoly::binomial(key.first, key.second).toString() + ")";
        if (e != 1) den += "^" + std::to_string(e);
    }
    return "(" + num_.toString() + ")/(" + den + ")";
}

const mpq_class& EvalRing::binomialValue(const FactorKey& key) const {
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    mpq_class v = 1 - rationalPow(point_.q0, key.first) * rationalPow(point_.t0, key.second);
    return cache_.emplace(key, v).first->second;
}

mpq_class EvalRing::lift(const QTFactored& x) const {
    if (x.isZero()) return 0;
    mpq_class v = x.coeff() * rationalPow(point_.q0, x.qExp()) * rationalPow(point_.t0, x.tExp());
    for (const auto& [key, e] : x.factors()) {
        const mpq_class& f = binomialValue(key);
        if (f == 0) {
            if (e < 0) throw VanishingFactor("binomial vanishes at " + point_.toString());
            return 0;
        }
        v *= rationalPow(f, e);
    }
    return v;
}

}  // namespace qthook
