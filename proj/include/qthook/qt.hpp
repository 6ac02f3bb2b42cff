#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qthook/bipoly.hpp"
#include "qthook/partition.hpp"

namespace qthook {

// Key (a,b) stands for the factor (1 - q^a t^b).
using FactorKey = std::pair<int, int>;

// coeff * q^qExp * t^tExp * prod (1 - q^a t^b)^e
class QTFactored {
public:
    QTFactored() : coeff_(1) {}
    QTFactored(const mpq_class& c);  // NOLINT
    QTFactored(int c) : QTFactored(mpq_class(c)) {}  // NOLINT
    static QTFactored zero() { return QTFactored(0); }
    static QTFactored monomial(const mpq_class& c, int qe, int te);
    // (1 - q^a t^b)^e; a factor with a = b = 0 is rejected.
    static QTFactored factor(int a, int b, int e = 1);

    bool isZero() const { return coeff_ == 0; }
    const mpq_class& coeff() const { return coeff_; }
    int qExp() const { return qExp_; }
    int tExp() const { return tExp_; }
    const std::map<FactorKey, int>& factors() const { return factors_; }

    QTFactored operator*(const QTFactored& o) const;
    QTFactored operator/(const QTFactored& o) const;
    QTFactored& operator*=(const QTFactored& o) { return *this = *this * o; }
    QTFactored& operator/=(const QTFactored& o) { return *this = *this / o; }
    QTFactored inverse() const;
    QTFactored pow(int e) const;

    // Cross-multiplication form: value = num / den with den a product of binomials.
    BiPoly numerator() const;
    BiPoly denominator() const;

    // Structural equality of the stored representation (not value equality).
    bool sameRepresentation(const QTFactored& o) const;

    std::string toString() const;

private:
    mpq_class coeff_;
    int qExp_ = 0;
    int tExp_ = 0;
    std::map<FactorKey, int> factors_;
};

struct EvalPoint {
    mpq_class q0;
    mpq_class t0;
    std::string toString() const { return "(" + q0.get_str() + ", " + t0.get_str() + ")"; }
};

class VanishingFactor : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws VanishingFactor when a denominator binomial vanishes at the point.
mpq_class evaluate(const QTFactored& x, const EvalPoint& p);

// Sample points with q0,t0 = a/b, a,b in {2..7}, chosen multiplicatively
// independent so that no binomial 1 - q^a t^b can vanish.
std::vector<EvalPoint> samplePoints(std::uint64_t seed, int count);

enum class Mode { Exact, Eval };
std::string modeName(Mode m);

bool qtEquals(const QTFactored& x, const QTFactored& y, Mode mode,
              const std::vector<EvalPoint>& points = {});

// ---- building blocks -------------------------------------------------------

// (t^{m+1};q)_n / (q t^m;q)_n, zero for n < 0.
QTFactored fFun(int n, int m);
inline QTFactored fSeriesCoeff(int k) { return fFun(k, 0); }

// Product over cells of (1 - q^a t^{l+1}) / (1 - q^{a+1} t^l).
QTFactored bLambda(const Partition& lambda);
QTFactored bLambdaFProduct(const Partition& lambda);
QTFactored bEl(const Partition& lambda);
QTFactored bElFProduct(const Partition& lambda);
QTFactored bOa(const Partition& lambda);
QTFactored bOddLeg(const Partition& lambda);

// Pieri coefficients; zero unless lambda/mu is a horizontal strip.
QTFactored phiSkew(const Partition& lambda, const Partition& mu);
QTFactored psiSkew(const Partition& lambda, const Partition& mu);

}  // namespace qthook
