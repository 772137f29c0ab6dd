#ifndef ZETALIN_NUMERIC_HPP
#define ZETALIN_NUMERIC_HPP

#include <zetalin/brick.hpp>
#include <zetalin/series.hpp>
#include <zetalin/words.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <vector>

namespace zetalin {

// Arbitrary-precision binary float (MPFR). Precision is carried by the ambient
// default; every public entry point installs its own PrecisionScope.
using BigFloat = boost::multiprecision::mpfr_float;

unsigned digits10_for_bits(unsigned bits);

class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

BigFloat to_bigfloat(const Rat& q);

struct NumericResult {
    BigFloat value;
    BigFloat error; // estimated absolute error
};

// One summation level of a nested series: the factor k^e / prod (k+j)^s, with the
// next-inner level evaluated at k - delta (delta = 1 for strict ordering).
struct EmLevel {
    int e = 0;
    PoleSet poles;
    int delta = 0;
};

// Euler-Maclaurin closure of the nested sum over k_1 >= ... (>=|>) ... >= 1 of the
// level factors; exact partial sums up to a small anchor, asymptotic tails beyond.
NumericResult em_nested_value(const std::vector<EmLevel>& levels, unsigned bits);

// sum_{k >= K} k^{-s}, s >= 2.
BigFloat hurwitz_tail(int s, long K, unsigned bits = 128);

// zeta(s_1, ..., s_p), s_1 >= 2, s_i >= 1. Accuracy guarantee is desk-scale for
// depth <= 3; deeper compositions run through the same closure with a widened
// error estimate.
NumericResult mzv_numeric(const Composition& s, unsigned bits = 128);

BigFloat mzv_expr_numeric(const MZVExpr& e, unsigned bits = 128);

// La (non-strict) or Li (strict) at direct argument values, |args[0]| < 1.
BigFloat polylog_numeric(const std::vector<int>& s, const std::vector<BigFloat>& args,
                         unsigned bits = 128, bool strict = false);

// Evaluate the series at rational base-variable values. All-ones routes through
// the Euler-Maclaurin engine (requires convergence); otherwise |args_1(z)| > 1 is
// required and a geometric tail bound is reported.
NumericResult series_numeric(const MultSeries& s, const std::vector<Rat>& zvals,
                             long cutoff = 4096, unsigned bits = 128);

// Plain partial sum over k_1 <= K (no tail closure).
BigFloat series_partial_sum(const MultSeries& s, const std::vector<Rat>& zvals, long K,
                            unsigned bits = 128);

// Brick value at rational base-variable values, |args_1(z)| > 1.
NumericResult brick_numeric(const Brick& b, const std::vector<Rat>& zvals,
                            unsigned bits = 128);

// Value of a Decomposition: coefficients evaluated exactly at z, La terms at 1/zhat.
NumericResult decomposition_numeric(const Decomposition& d, const std::vector<Rat>& zvals,
                                    unsigned bits = 128);

} // namespace zetalin

#endif
