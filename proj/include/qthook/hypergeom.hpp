#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "qthook/qt.hpp"
#include "qthook/report.hpp"

namespace qthook {

using QRat = mpq_class;

// (a;q)_n, with (a;q)_{-m} = 1 / prod_{k=1}^{m} (1 - a q^{-k}).
QRat qPoch(const QRat& a, const QRat& q, int n);
QRat qPochProduct(const std::vector<QRat>& as, const QRat& q, int n);

// Exact rational square root, when there is one.
std::optional<QRat> exactSqrt(const QRat& x);

// Smallest k in [0, limit] with a = q^{-k}.
std::optional<int> negativePowerOf(const QRat& a, const QRat& q, int limit = 256);

struct SeriesSpec {
    std::vector<QRat> upper;
    std::vector<QRat> lower;
    QRat q;
    QRat z;
    std::optional<int> termCap;
};

// Last index with a possibly nonzero term: the smallest termination witness,
// capped by termCap. Throws when neither is available.
int terminationBound(const SeriesSpec& s);

// sum_n (uppers;q)_n / (q, lowers;q)_n z^n over the terminating range.
// Throws std::domain_error on a lower-parameter pole inside the range.
QRat phiSeries(const SeriesSpec& s);
bool isBalanced(const SeriesSpec& s);

// A parameter of a very-well-poised series. A pair stands for the two
// parameters +-sqrt(square) and is carried by its square.
struct WParam {
    QRat value;
    bool pair = false;
    static WParam single(const QRat& v) { return {v, false}; }
    static WParam plusMinus(const QRat& square) { return {square, true}; }
};

// Number of scalar parameters in the tail (pairs count twice).
int wTailLength(const std::vector<WParam>& tail);

// W(a1; tail; q, z) by the per-term form (1 - a1 q^{2n})/(1 - a1) * prod ratios.
// Pairs enter as (s^2;q^2)_n / (q^2 a1^2 / s^2; q^2)_n, so no square root is needed.
QRat wSeries(const QRat& a1, const std::vector<WParam>& tail, const QRat& q, const QRat& z);
// The same series expanded into its phi form; empty when a needed square root is irrational.
std::optional<QRat> wSeriesPhiForm(const QRat& a1, const std::vector<WParam>& tail, const QRat& q, const QRat& z);

struct GasperSides {
    QRat lhs;
    QRat prefactor;
    QRat w;
    QRat rhs;
};

// The second +- pair of the 12W11 is +-q (bc/ad)^{1/2}. Displayed keeps the
// printed +-q (bc/d)^{1/2}, which does not give an identity.
enum class GasperReading { Corrected, Displayed };

// Both sides of the 4phi3 -> 12W11 transformation with c = q^{-n}.
// corrupt lengthens one prefactor Pochhammer by a step.
GasperSides gasperSides(const QRat& a, const QRat& b, const QRat& d, const QRat& q, int n, bool corrupt = false,
                        GasperReading reading = GasperReading::Corrected);
VerificationReport gasperCheck(const QRat& a, const QRat& b, const QRat& d, const QRat& q, int n,
                               bool corrupt = false);
// Seeded random draws; degenerate draws are resampled.
VerificationReport gasperSweep(std::uint64_t seed, int trials, int maxN, bool corrupt = false);
VerificationReport wSeriesDualSweep(std::uint64_t seed, int count);

// Summands of both sides of the n-step summation theorem. theta_i follows
// theta_i = gamma_i + theta_{i-1} + rho_{i-1} - rho_i; the right side runs over
// k_1..k_n with k_1 + ... + k_n <= rho0 - k0.
std::vector<QTFactored> generalLhsTerms(int m, int k0, int rho0, int theta0, const std::vector<int>& gamma);
std::vector<QTFactored> generalRhsTerms(int m, int k0, int rho0, int theta0, const std::vector<int>& gamma);
// The one-step case, written out directly.
std::vector<QTFactored> lemmaLhsTerms(int m, int k0, int rho0, int theta0, int gamma);
std::vector<QTFactored> lemmaRhsTerms(int m, int k0, int rho0, int theta0, int gamma);

// The two final identities: Phi-hat sums over rho chains against the
// b-ratio sums over compositions of l.
std::vector<QTFactored> birdsFinalLhsTerms(int rho0, int theta0, const std::vector<int>& r);
std::vector<QTFactored> birdsFinalRhsTerms(int rho0, int theta0, const std::vector<int>& r);
// lambda has four weakly decreasing entries; r holds r_2..r_f.
std::vector<QTFactored> bannersFinalLhsTerms(const std::vector<int>& lambda, const std::vector<int>& r);
std::vector<QTFactored> bannersFinalRhsTerms(const std::vector<int>& lambda, const std::vector<int>& r);

// Compares the two sums, exactly or at the given points.
VerificationReport compareSums(const std::vector<QTFactored>& lhs, const std::vector<QTFactored>& rhs, Mode mode,
                               const std::vector<EvalPoint>& points);

VerificationReport lemmaCheck(int m, int k0, int rho0, int theta0, int gamma, Mode mode = Mode::Exact,
                              const std::vector<EvalPoint>& points = {});
VerificationReport generalCheck(int m, int k0, int rho0, int theta0, const std::vector<int>& gamma,
                                Mode mode = Mode::Exact, const std::vector<EvalPoint>& points = {});
VerificationReport birdsFinalCheck(int rho0, int theta0, const std::vector<int>& r, Mode mode = Mode::Exact,
                                   const std::vector<EvalPoint>& points = {});
VerificationReport bannersFinalCheck(const std::vector<int>& lambda, const std::vector<int>& r,
                                     Mode mode = Mode::Exact, const std::vector<EvalPoint>& points = {});

// The b-ratio simplifications for two-row and four-row shapes, for all l <= rho0 <= theta0 <= maxBound.
VerificationReport birdsRatioCheck(int maxBound);
VerificationReport bannersRatioCheck(int maxBound);

// Sweeps over the documented ranges.
VerificationReport lemmaSweep(int maxM, int maxBound, int maxGamma);
VerificationReport generalSweep(int maxN, int maxM, int maxBound);
VerificationReport birdsFinalSweep(int maxF, int maxBound);
VerificationReport bannersFinalSweep(int maxF, int maxBound);

}  // namespace qthook
