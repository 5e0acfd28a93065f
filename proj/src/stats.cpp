#include "progrand/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "progrand/errors.hpp"

namespace progrand {

namespace {

struct Centered {
    std::vector<double> values;
    double norm_sq = 0.0;
};

Centered center(const Sequence& x) {
    double sum = 0.0;
    for (double v : x) sum += v;
    const double mean = sum / static_cast<double>(x.size());
    Centered c;
    c.values.reserve(x.size());
    for (double v : x) {
        const double d = v - mean;
        c.values.push_back(d);
        c.norm_sq += d * d;
    }
    return c;
}

// numerator of the lagged product over the valid overlap, left to right
double overlap_dot(const std::vector<double>& xc, const std::vector<double>& yc, long f) {
    const long n = static_cast<long>(xc.size());
    const long lo = std::max(long{0}, -f);
    const long hi = std::min(n - 1, n - 1 - f);
    double sum = 0.0;
    for (long i = lo; i <= hi; ++i) sum += xc[static_cast<std::size_t>(i)] * yc[static_cast<std::size_t>(i + f)];
    return sum;
}

void check_lengths(const Sequence& x, const Sequence& y) {
    if (x.size() != y.size()) {
        throw Error("sequences must have equal length, got " + std::to_string(x.size()) + " and " +
                    std::to_string(y.size()));
    }
    if (x.size() < 2) throw Error("correlation needs at least 2 samples");
}

void check_lag(long f, std::size_t n) {
    const long limit = static_cast<long>(n) - 2;
    if (f > limit || f < -limit) {
        throw LagOutOfRange("lag " + std::to_string(f) + " outside [-(N-2), N-2] = [" +
                            std::to_string(-limit) + ", " + std::to_string(limit) + "]");
    }
}

void check_variance(const Centered& c, const char* name) {
    if (c.norm_sq == 0.0) {
        throw ZeroVariance(std::string("sequence ") + name +
                           " is constant; correlation is undefined");
    }
}

// shared scan used by max_abs_correlation and correlation_report
MaxCorrelation scan_max(const Centered& cx, const Centered& cy, long max_lag, bool exclude_zero,
                        double denom, std::vector<long>* lags, std::vector<double>* values) {
    std::vector<double> r(static_cast<std::size_t>(2 * max_lag + 1));
    for (long f = -max_lag; f <= max_lag; ++f) {
        r[static_cast<std::size_t>(f + max_lag)] = overlap_dot(cx.values, cy.values, f) / denom;
    }
    // |f| ascending, negative first, so strictly-greater acceptance encodes the tie rule
    MaxCorrelation best;
    bool have_best = false;
    for (long a = (exclude_zero ? 1 : 0); a <= max_lag; ++a) {
        for (long f : {-a, a}) {
            const double v = r[static_cast<std::size_t>(f + max_lag)];
            if (!have_best || std::abs(v) > std::abs(best.value)) {
                best = {f, v};
                have_best = true;
            }
            if (a == 0) break;  // -0 == +0
        }
    }
    if (!have_best) throw Error("no lags to scan: max_lag is 0 and lag 0 is excluded");
    if (lags) {
        for (long f = -max_lag; f <= max_lag; ++f) {
            lags->push_back(f);
            values->push_back(r[static_cast<std::size_t>(f + max_lag)]);
        }
    }
    return best;
}

}  // namespace

Sequence to_sequence(const std::vector<std::uint8_t>& bits) {
    Sequence out;
    out.reserve(bits.size());
    for (std::uint8_t b : bits) out.push_back(b ? 1.0 : 0.0);
    return out;
}

double cross_correlation(const Sequence& x, const Sequence& y, long f) {
    check_lengths(x, y);
    check_lag(f, x.size());
    const Centered cx = center(x);
    const Centered cy = center(y);
    check_variance(cx, "x");
    check_variance(cy, "y");
    return overlap_dot(cx.values, cy.values, f) / (std::sqrt(cx.norm_sq) * std::sqrt(cy.norm_sq));
}

double auto_correlation(const Sequence& x, long f) {
    if (x.size() < 2) throw Error("correlation needs at least 2 samples");
    check_lag(f, x.size());
    const Centered cx = center(x);
    check_variance(cx, "x");
    return overlap_dot(cx.values, cx.values, f) / cx.norm_sq;
}

MaxCorrelation max_abs_correlation(const Sequence& x, const Sequence& y, long max_lag) {
    check_lengths(x, y);
    if (max_lag < 0) throw LagOutOfRange("max_lag must be non-negative");
    check_lag(max_lag, x.size());
    const bool same = x == y;
    const Centered cx = center(x);
    const Centered cy = center(y);
    check_variance(cx, "x");
    check_variance(cy, "y");
    const double denom = std::sqrt(cx.norm_sq) * std::sqrt(cy.norm_sq);
    return scan_max(cx, cy, max_lag, same, denom, nullptr, nullptr);
}

CorrelationReport correlation_report(const Sequence& x, const Sequence& y, long max_lag) {
    check_lengths(x, y);
    if (max_lag < 0) throw LagOutOfRange("max_lag must be non-negative");
    check_lag(max_lag, x.size());
    const bool same = x == y;
    const Centered cx = center(x);
    const Centered cy = center(y);
    check_variance(cx, "x");
    check_variance(cy, "y");
    const double denom = std::sqrt(cx.norm_sq) * std::sqrt(cy.norm_sq);
    CorrelationReport report;
    report.lags.reserve(static_cast<std::size_t>(2 * max_lag + 1));
    report.values.reserve(static_cast<std::size_t>(2 * max_lag + 1));
    const MaxCorrelation best =
        scan_max(cx, cy, max_lag, same, denom, &report.lags, &report.values);
    report.max_abs_lag = best.lag;
    report.max_abs_value = best.value;
    return report;
}

Sequence cumulative_count_curve(const Sequence& bits) {
    double total = 0.0;
    for (double b : bits) {
        if (b != 0.0 && b != 1.0) throw Error("cumulative count input must be 0/1 valued");
        total += b;
    }
    if (total == 0.0) throw NoOnes("input contains no 1's; the curve cannot be normalized");
    Sequence curve;
    curve.reserve(bits.size());
    double running = 0.0;
    for (double b : bits) {
        running += b;
        curve.push_back(running / total);
    }
    return curve;
}

QuadraticFit quadratic_fit(const Sequence& t, const Sequence& v) {
    if (t.size() != v.size()) throw Error("t and v must have equal length");
    if (t.size() < 3 || std::set<double>(t.begin(), t.end()).size() < 3) {
        throw DegenerateDesign("quadratic fit needs at least 3 distinct t values");
    }

    // normal equations over the basis [t^2, t, 1], accumulated in long double
    long double s[5] = {};  // sums of t^0 .. t^4
    long double b[3] = {};  // sums of v * t^2, v * t, v
    for (std::size_t i = 0; i < t.size(); ++i) {
        const long double ti = t[i];
        long double pw = 1.0L;
        for (int p = 0; p <= 4; ++p, pw *= ti) s[p] += pw;
        b[0] += static_cast<long double>(v[i]) * ti * ti;
        b[1] += static_cast<long double>(v[i]) * ti;
        b[2] += v[i];
    }
    long double a[3][4] = {
        {s[4], s[3], s[2], b[0]},
        {s[3], s[2], s[1], b[1]},
        {s[2], s[1], s[0], b[2]},
    };
    // Gaussian elimination with partial pivoting
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r) {
            if (std::abs(static_cast<double>(a[r][col])) >
                std::abs(static_cast<double>(a[pivot][col]))) {
                pivot = r;
            }
        }
        std::swap(a[col], a[pivot]);
        if (a[col][col] == 0.0L) throw DegenerateDesign("singular design matrix in quadratic fit");
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            const long double factor = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    QuadraticFit fit;
    fit.c2 = static_cast<double>(a[0][3] / a[0][0]);
    fit.c1 = static_cast<double>(a[1][3] / a[1][1]);
    fit.c0 = static_cast<double>(a[2][3] / a[2][2]);

    double vbar = 0.0;
    for (double vi : v) vbar += vi;
    vbar /= static_cast<double>(v.size());
    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double pred = fit.c2 * t[i] * t[i] + fit.c1 * t[i] + fit.c0;
        ss_res += (v[i] - pred) * (v[i] - pred);
        ss_tot += (v[i] - vbar) * (v[i] - vbar);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    return fit;
}

std::pair<double, double> fit_derivative(const QuadraticFit& fit) {
    return {2.0 * fit.c2, fit.c1};
}

long default_max_lag(std::size_t n) {
    if (n < 3) throw Error("sequence too short for a correlation report");
    const long by_tenth = static_cast<long>(n / 10);
    return std::clamp(std::min(long{1000}, by_tenth), long{1}, static_cast<long>(n) - 2);
}

}  // namespace progrand
