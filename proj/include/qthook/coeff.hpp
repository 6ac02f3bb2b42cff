#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "qthook/bipoly.hpp"
#include "qthook/qt.hpp"

namespace qthook {

// Exact element of Q(q,t): a Laurent numerator over a product of binomials
// (1 - q^a t^b)^e. Closed under +, -, * and under multiplication by any
// QTFactored; sums put the two denominators over their exponent-wise maximum.
class RatQT {
public:
    RatQT() = default;
    RatQT(const mpq_class& c) : num_(c) {}  // NOLINT
    explicit RatQT(const QTFactored& x);
    RatQT(BiPoly num, std::map<FactorKey, int> den);

    const BiPoly& num() const { return num_; }
    const std::map<FactorKey, int>& den() const { return den_; }
    BiPoly denominatorPoly() const;
    bool isZero() const { return num_.isZero(); }

    RatQT operator+(const RatQT& o) const;
    RatQT operator-(const RatQT& o) const;
    RatQT operator-() const;
    RatQT operator*(const RatQT& o) const;
    RatQT& operator+=(const RatQT& o) { return *this = *this + o; }
    RatQT& operator-=(const RatQT& o) { return *this = *this - o; }
    RatQT& operator*=(const RatQT& o) { return *this = *this * o; }
    RatQT times(const QTFactored& x) const;

    // Cancels denominator binomials that divide the numerator.
    RatQT reduced() const;

    bool operator==(const RatQT& o) const { return (*this - o).isZero(); }

    mpq_class evaluate(const EvalPoint& p) const;
    std::string toString() const;

private:
    void maybeReduce();
    BiPoly num_;
    std::map<FactorKey, int> den_;
};

// Coefficient domains. Exact: RatQT. Eval: exact rationals at a fixed (q0,t0).
struct ExactRing {
    using value_type = RatQT;
    Mode mode() const { return Mode::Exact; }
    RatQT zero() const { return RatQT(); }
    RatQT one() const { return RatQT(mpq_class(1)); }
    RatQT lift(const QTFactored& x) const { return RatQT(x); }
    RatQT fromRational(const mpq_class& c) const { return RatQT(c); }
    RatQT mulFactored(const RatQT& v, const QTFactored& x) const { return v.times(x); }
    static bool isZero(const RatQT& v) { return v.isZero(); }
    static std::string numString(const RatQT& v) { return v.num().toString(); }
    static std::string denString(const RatQT& v) { return v.denominatorPoly().toString(); }
    static std::string str(const RatQT& v) { return v.toString(); }
};

class EvalRing {
public:
    using value_type = mpq_class;
    explicit EvalRing(EvalPoint p) : point_(std::move(p)) {}
    const EvalPoint& point() const { return point_; }
    Mode mode() const { return Mode::Eval; }
    mpq_class zero() const { return 0; }
    mpq_class one() const { return 1; }
    mpq_class lift(const QTFactored& x) const;
    mpq_class fromRational(const mpq_class& c) const { return c; }
    mpq_class mulFactored(const mpq_class& v, const QTFactored& x) const { return v * lift(x); }
    static bool isZero(const mpq_class& v) { return v == 0; }
    static std::string numString(const mpq_class& v) { return v.get_num().get_str(); }
    static std::string denString(const mpq_class& v) { return v.get_den().get_str(); }
    static std::string str(const mpq_class& v) { return v.get_str(); }

private:
    const mpq_class& binomialValue(const FactorKey& key) const;
    EvalPoint point_;
    mutable std::map<FactorKey, mpq_class> cache_;
};

}  // namespace qthook
