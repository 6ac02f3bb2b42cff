#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qthook {

// Sparse Laurent polynomial in q and t with rational coefficients.
class BiPoly {
public:
    struct Term {
        int q = 0;
        int t = 0;
        mpq_class c;
    };

    BiPoly() = default;
    BiPoly(const mpq_class& c);  // NOLINT: constants convert implicitly
    static BiPoly monomial(const mpq_class& c, int qe, int te);
    // 1 - q^a t^b
    static BiPoly binomial(int a, int b);

    const std::vector<Term>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator-() const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    BiPoly scaled(const mpq_class& c) const;
    BiPoly shifted(int qe, int te) const;
    BiPoly pow(int e) const;

    // Exact quotient by (1 - q^a t^b) when it divides; returns false otherwise.
    bool divideByBinomial(int a, int b, BiPoly& quotient) const;

    mpq_class evaluate(const mpq_class& q, const mpq_class& t) const;

    bool operator==(const BiPoly& o) const;

    // Canonical text: terms in increasing (q, t) order, e.g. "1 - q*t^2".
    std::string toString() const;

private:
    static BiPoly fromUnsorted(std::vector<Term> terms);
    std::vector<Term> terms_;  // sorted by (q, t), no zero coefficients
};

mpq_class rationalPow(const mpq_class& base, int e);

}  // namespace qthook
