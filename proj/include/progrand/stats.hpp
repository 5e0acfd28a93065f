#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace progrand {

// Real-valued sample sequence; bit streams are lifted to 0.0/1.0.
using Sequence = std::vector<double>;

Sequence to_sequence(const std::vector<std::uint8_t>& bits);

// Normalized cross-correlation at lag f. The numerator sums over the index
// overlap (1 <= n <= N and 1 <= n+f <= N); means and the denominator norms
// are taken over the full sequences. Summation is left to right.
// Throws ZeroVariance on a constant input and LagOutOfRange for |f| > N-2.
double cross_correlation(const Sequence& x, const Sequence& y, long f);

// Same with y = x; exactly 1 at f = 0.
double auto_correlation(const Sequence& x, long f);

struct MaxCorrelation {
    long lag = 0;
    double value = 0.0;
};

// Scans f in [-max_lag, +max_lag] and returns the signed value of greatest
// magnitude. Lag 0 is excluded when x and y are the same sequence. Ties go
// to the smallest |f|, negative lag first.
MaxCorrelation max_abs_correlation(const Sequence& x, const Sequence& y, long max_lag);

struct CorrelationReport {
    std::vector<long> lags;        // -max_lag .. +max_lag
    std::vector<double> values;    // R at each lag
    long max_abs_lag = 0;
    double max_abs_value = 0.0;
};

CorrelationReport correlation_report(const Sequence& x, const Sequence& y, long max_lag);

// Running count of 1's scaled by the total count (ends at 1.0).
// Throws NoOnes on an all-zero input.
Sequence cumulative_count_curve(const Sequence& bits);

struct QuadraticFit {
    double c2 = 0.0;
    double c1 = 0.0;
    double c0 = 0.0;
    double r_squared = 0.0;
};

// Ordinary least squares of v against [t^2, t, 1].
// Throws DegenerateDesign with fewer than 3 distinct t values.
QuadraticFit quadratic_fit(const Sequence& t, const Sequence& v);

// Coefficients of d/dt (c2 t^2 + c1 t + c0): (slope, intercept) = (2 c2, c1).
std::pair<double, double> fit_derivative(const QuadraticFit& fit);

// Default report scan range: min(1000, N/10), clamped to [1, N-2].
long default_max_lag(std::size_t n);

}  // namespace progrand
