#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "qthook/coeff.hpp"
#include "qthook/report.hpp"

namespace qthook {

using Exps = std::vector<int>;

class VarSet {
public:
    explicit VarSet(std::vector<std::string> names);
    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    int indexOf(const std::string& name) const;
    Exps unit(const std::string& name) const;
    Exps one() const { return Exps(names_.size(), 0); }
    std::string format(const Exps& e) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;
VarSetPtr makeVarSet(std::vector<std::string> names);

int totalDegree(const Exps& e);
Exps addExps(const Exps& a, const Exps& b);
Exps subExps(const Exps& a, const Exps& b);
Exps scaleExps(const Exps& a, int k);
bool nonnegative(const Exps& e);
// Graded order: total degree first, then lexicographic.
bool gradedLess(const Exps& a, const Exps& b);

inline bool coeffIsZero(const RatQT& v) { return v.isZero(); }
inline bool coeffIsZero(const mpq_class& v) { return v == 0; }

// Finite Laurent polynomial; used for intermediate expressions before truncation.
template <class C>
using Poly = std::map<Exps, C>;

template <class C>
void polyAdd(Poly<C>& p, const Exps& e, const std::type_identity_t<C>& c) {
    if (coeffIsZero(c)) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
        return;
    }
    it->second += c;
    if (coeffIsZero(it->second)) p.erase(it);
}

template <class C>
Poly<C> polyMul(const Poly<C>& a, const Poly<C>& b) {
    Poly<C> out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) polyAdd(out, addExps(ea, eb), ca * cb);
    return out;
}

// Truncated power series in the variables of a VarSet, total degree <= D.
template <class C>
class MultiSeries {
public:
    MultiSeries(VarSetPtr vars, int D) : vars_(std::move(vars)), D_(D) {}
    static MultiSeries constant(VarSetPtr vars, int D, const C& c) {
        MultiSeries s(std::move(vars), D);
        s.add(s.vars_->one(), c);
        return s;
    }

    const VarSetPtr& vars() const { return vars_; }
    int truncation() const { return D_; }
    const Poly<C>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    // Adds c * x^e; terms above the truncation are dropped.
    void add(const Exps& e, const C& c) {
        if (static_cast<int>(e.size()) != vars_->size()) throw std::invalid_argument("exponent length");
        if (!nonnegative(e)) throw std::domain_error("negative exponent in power series: " + vars_->format(e));
        if (totalDegree(e) > D_) return;
        polyAdd(terms_, e, c);
    }

    C coefficient(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C() : it->second;
    }

    MultiSeries operator+(const MultiSeries& o) const {
        checkCompatible(o);
        MultiSeries r = *this;
        for (const auto& [e, c] : o.terms_) polyAdd(r.terms_, e, c);
        return r;
    }
    MultiSeries operator-(const MultiSeries& o) const { return *this + o.scaled(C(mpq_class(-1))); }
    MultiSeries& operator+=(const MultiSeries& o) { return *this = *this + o; }

    MultiSeries operator*(const MultiSeries& o) const {
        checkCompatible(o);
        std::vector<std::vector<const typename Poly<C>::value_type*>> byDegree(D_ + 1);
        for (const auto& kv : o.terms_) byDegree[totalDegree(kv.first)].push_back(&kv);
        MultiSeries r(vars_, D_);
        for (const auto& [ea, ca] : terms_) {
            int room = D_ - totalDegree(ea);
            for (int d = 0; d <= room; ++d)
                for (const auto* kv : byDegree[d]) polyAdd(r.terms_, addExps(ea, kv->first), ca * kv->second);
        }
        return r;
    }
    MultiSeries& operator*=(const MultiSeries& o) { return *this = *this * o; }

    MultiSeries scaled(const C& c) const {
        MultiSeries r(vars_, D_);
        if (coeffIsZero(c)) return r;
        for (const auto& [e, v] : terms_) polyAdd(r.terms_, e, v * c);
        return r;
    }

    // Multiplies by a monomial that may carry negative exponents; every
    // resulting exponent must be nonnegative.
    MultiSeries shiftedBy(const Exps& m) const {
        MultiSeries r(vars_, D_);
        for (const auto& [e, v] : terms_) r.add(addExps(e, m), v);
        return r;
    }

    static MultiSeries fromPoly(VarSetPtr vars, int D, const Poly<C>& p) {
        MultiSeries r(std::move(vars), D);
        for (const auto& [e, c] : p) r.add(e, c);
        return r;
    }

private:
    void checkCompatible(const MultiSeries& o) const {
        if (vars_ != o.vars_ && vars_->names() != o.vars_->names())
            throw std::invalid_argument("series over different variable sets");
        if (D_ != o.D_) throw std::invalid_argument("series with different truncation");
    }

    VarSetPtr vars_;
    int D_;
    Poly<C> terms_;
};

// F(m) = sum_k f(k;0) m^k truncated at D.
template <class R>
MultiSeries<typename R::value_type> seriesF(const R& ring, const VarSetPtr& vars, const Exps& m, int D) {
    if (!nonnegative(m)) throw std::domain_error("seriesF: negative exponent");
    int deg = totalDegree(m);
    if (deg < 1) throw std::domain_error("seriesF: monomial of degree 0 does not truncate");
    MultiSeries<typename R::value_type> s(vars, D);
    for (int k = 0; k * deg <= D; ++k) s.add(scaleExps(m, k), ring.lift(fSeriesCoeff(k)));
    return s;
}

// Sum_k c_k m^k for a coefficient sequence given as a function of k.
template <class R, class CoeffFn>
MultiSeries<typename R::value_type> seriesFromCoefficients(const R& ring, const VarSetPtr& vars, const Exps& m,
                                                           int D, CoeffFn coeff) {
    int deg = totalDegree(m);
    if (!nonnegative(m) || deg < 1) throw std::domain_error("series argument must have degree >= 1");
    MultiSeries<typename R::value_type> s(vars, D);
    for (int k = 0; k * deg <= D; ++k) s.add(scaleExps(m, k), ring.lift(coeff(k)));
    return s;
}

// Substitutes monomials for the variables of p. Degree-0 images are allowed
// only when allowConstant is set and the caller bounds the degree otherwise.
template <class C>
MultiSeries<C> substituteMonomials(const Poly<C>& p, const std::vector<Exps>& images, const VarSetPtr& vars, int D,
                                   bool allowConstant = false) {
    for (const auto& img : images) {
        if (!nonnegative(img)) throw std::domain_error("substitution image with negative exponent");
        if (!allowConstant && totalDegree(img) < 1) throw std::domain_error("substitution image of degree 0");
    }
    MultiSeries<C> out(vars, D);
    for (const auto& [e, c] : p) {
        Exps target = vars->one();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) target = addExps(target, scaleExps(images.at(i), e[i]));
        out.add(target, c);
    }
    return out;
}

template <class C>
Poly<C> substituteToPoly(const Poly<C>& p, const std::vector<Exps>& images, int width) {
    Poly<C> out;
    for (const auto& [e, c] : p) {
        Exps target(width, 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) target = addExps(target, scaleExps(images.at(i), e[i]));
        polyAdd(out, target, c);
    }
    return out;
}

template <class R>
void stampRing(const R& ring, VerificationReport& rep) {
    rep.mode = ring.mode();
    if constexpr (requires { ring.point(); }) rep.points = {ring.point()};
}

// Compares two finite polynomials coefficientwise; the first mismatch in
// graded order is reported.
template <class R>
VerificationReport comparePolys(const R& ring, const VarSet& vars, const Poly<typename R::value_type>& a,
                                const Poly<typename R::value_type>& b) {
    using C = typename R::value_type;
    VerificationReport rep;
    stampRing(ring, rep);
    std::vector<Exps> keys;
    for (const auto& kv : a) keys.push_back(kv.first);
    for (const auto& kv : b) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), gradedLess);
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const auto& e : keys) {
        auto ia = a.find(e), ib = b.find(e);
        C ca = ia == a.end() ? C() : ia->second;
        C cb = ib == b.end() ? C() : ib->second;
        ++rep.cases;
        if (!coeffIsZero(ca - cb)) {
            rep.fail({vars.format(e), R::str(ca), R::str(cb)});
            break;
        }
    }
    return rep;
}

template <class R>
VerificationReport seriesEquals(const R& ring, const MultiSeries<typename R::value_type>& a,
                                const MultiSeries<typename R::value_type>& b) {
    if (a.truncation() != b.truncation() || a.vars()->names() != b.vars()->names())
        throw std::invalid_argument("seriesEquals: incompatible series");
    VerificationReport rep = comparePolys(ring, *a.vars(), a.terms(), b.terms());
    rep.check = "seriesEquals";
    rep.degree = a.truncation();
    return rep;
}

// Adds a homogeneous-or-higher polynomial to a series after checking that no
// term sits below the declared degree floor.
template <class C>
void addWithFloor(MultiSeries<C>& s, const Poly<C>& p, int floor) {
    for (const auto& [e, c] : p) {
        if (totalDegree(e) < floor) throw std::logic_error("term below its declared degree floor");
        s.add(e, c);
    }
}

// Moves a polynomial in k variables into the given slots of a wider space.
template <class C>
Poly<C> embedPoly(const Poly<C>& p, const std::vector<int>& slots, int width) {
    Poly<C> out;
    for (const auto& [e, c] : p) {
        Exps target(width, 0);
        for (std::size_t i = 0; i < e.size(); ++i) target.at(slots.at(i)) += e[i];
        polyAdd(out, target, c);
    }
    return out;
}

template <class R>
nlohmann::json seriesToJson(const R& ring, const MultiSeries<typename R::value_type>& s) {
    nlohmann::json j;
    j["vars"] = s.vars()->names();
    j["truncation"] = s.truncation();
    j["mode"] = modeName(ring.mode());
    nlohmann::json terms = nlohmann::json::array();
    std::vector<Exps> keys;
    for (const auto& kv : s.terms()) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), gradedLess);
    for (const auto& e : keys) {
        const auto& c = s.terms().at(e);
        terms.push_back({{"exps", e}, {"num", R::numString(c)}, {"den", R::denString(c)}});
    }
    j["terms"] = terms;
    return j;
}

}  // namespace qthook
