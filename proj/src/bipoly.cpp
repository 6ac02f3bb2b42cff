#include "qthook/bipoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace qthook {

namespace {

bool keyLess(const BiPoly::Term& a, const BiPoly::Term& b) {
    return a.q != b.q ? a.q < b.q : a.t < b.t;
}

std::uint64_t packKey(int q, int t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(q)) << 32) |
           static_cast<std::uint32_t>(t);
}

int floorDiv(int a, int b) {
    int d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

}  // namespace

mpq_class rationalPow(const mpq_class& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("zero to a negative power");
        mpq_class inv = 1 / base;
        return rationalPow(inv, -e);
    }
    mpq_class result = 1, b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

BiPoly::BiPoly(const mpq_class& c) {
    if (c != 0) terms_.push_back({0, 0, c});
}

BiPoly BiPoly::monomial(const mpq_class& c, int qe, int te) {
    BiPoly p;
    if (c != 0) p.terms_.push_back({qe, te, c});
    return p;
}

BiPoly BiPoly::binomial(int a, int b) {
    return BiPoly(1) - monomial(1, a, b);
}

BiPoly BiPoly::fromUnsorted(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), keyLess);
    BiPoly p;
    for (auto& term : terms) {
        if (!p.terms_.empty() && p.terms_.back().q == term.q && p.terms_.back().t == term.t)
            p.terms_.back().c += term.c;
        else
            p.terms_.push_back(std::move(term));
    }
    std::erase_if(p.terms_, [](const Term& x) { return x.c == 0; });
    return p;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && keyLess(terms_[i], o.terms_[j]))) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || keyLess(o.terms_[j], terms_[i])) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            mpq_class c = terms_[i].c + o.terms_[j].c;
            if (c != 0) r.terms_.push_back({terms_[i].q, terms_[i].t, c});
            ++i;
            ++j;
        }
    }
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& term : r.terms_) term.c = -term.c;
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (isZero() || o.isZero()) return {};
    if (o.terms_.size() == 1) return scaled(o.terms_[0].c).shifted(o.terms_[0].q, o.terms_[0].t);
    if (terms_.size() == 1) return o * *this;
    std::unordered_map<std::uint64_t, std::size_t> index;
    std::vector<Term> acc;
    index.reserve(terms_.size() * o.terms_.size());
    mpq_class prod;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            int qe = a.q + b.q, te = a.t + b.t;
            mpq_mul(prod.get_mpq_t(), a.c.get_mpq_t(), b.c.get_mpq_t());
            auto [it, inserted] = index.try_emplace(packKey(qe, te), acc.size());
            if (inserted)
                acc.push_back({qe, te, prod});
            else
                acc[it->second].c += prod;
        }
    }
    return fromUnsorted(std::move(acc));
}

BiPoly BiPoly::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    BiPoly r = *this;
    for (auto& term : r.terms_) term.c *= c;
    return r;
}

BiPoly BiPoly::shifted(int qe, int te) const {
    BiPoly r = *this;
    for (auto& term : r.terms_) {
        term.q += qe;
        term.t += te;
    }
    return r;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("BiPoly::pow negative exponent");
    BiPoly result(1), b = *this;
    while (e > 0) {
        if (e & 1) result = result * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return result;
}

bool BiPoly::divideByBinomial(int a, int b, BiPoly& quotient) const {
    // Terms sharing a residue class along (a,b) form a univariate polynomial in
    // m = q^a t^b; each such slice must vanish at m = 1, and the quotient is the
    // running sum of its coefficients.
    if (a < 0 || b < 0 || (a == 0 && b == 0)) throw std::invalid_argument("bad binomial");
    std::map<std::pair<int, int>, std::map<int, mpq_class>> slices;
    for (const auto& term : terms_) {
        int k = a > 0 ? floorDiv(term.q, a) : floorDiv(term.t, b);
        slices[{term.q - k * a, term.t - k * b}][k] += term.c;
    }
    std::vector<Term> out;
    for (auto& [rep, coeffs] : slices) {
        mpq_class running = 0;
        int last = coeffs.rbegin()->first;
        for (int k = coeffs.begin()->first; k < last; ++k) {
            auto it = coeffs.find(k);
            if (it != coeffs.end()) running += it->second;
            if (running != 0) out.push_back({rep.first + k * a, rep.second + k * b, running});
        }
        running += coeffs.rbegin()->second;
        if (running != 0) return false;
    }
    quotient = fromUnsorted(std::move(out));
    return true;
}

mpq_class BiPoly::evaluate(const mpq_class& q, const mpq_class& t) const {
    mpq_class sum = 0;
    std::map<int, mpq_class> qp, tp;
    for (const auto& term : terms_) {
        auto qi = qp.find(term.q);
        if (qi == qp.end()) qi = qp.emplace(term.q, rationalPow(q, term.q)).first;
        auto ti = tp.find(term.t);
        if (ti == tp.end()) ti = tp.emplace(term.t, rationalPow(t, term.t)).first;
        sum += term.c * qi->second * ti->second;
    }
    return sum;
}

bool BiPoly::operator==(const BiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& x = terms_[i];
        const auto& y = o.terms_[i];
        if (x.q != y.q || x.t != y.t || x.c != y.c) return false;
    }
    return true;
}

std::string BiPoly::toString() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& term : terms_) {
        mpq_class c = term.c;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (e != 1) mono += "^" + std::to_string(e);
        };
        var("q", term.q);
        var("t", term.t);
        if (mono.empty())
            out += c.get_str();
        else if (c == 1)
            out += mono;
        else
            out += c.get_str() + "*" + mono;
    }
    return out;
}

}  // namespace qthook
