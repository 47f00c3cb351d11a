#ifndef RISSEC_TEST_SUPPORT_HPP
#define RISSEC_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "numerics/quadrature.hpp"
#include "numerics/special_functions.hpp"

namespace testsup {

// One-sample Kolmogorov-Smirnov statistic against a CDF.
inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = double(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::fabs(f - double(i) / n));
        d = std::max(d, std::fabs(double(i + 1) / n - f));
    }
    return d;
}

// critical value at significance 0.01 (asymptotic): K_crit / sqrt(n)
inline double ks_critical_001(std::size_t n) {
    return 1.6276236115189503 / std::sqrt(double(n));
}

// Pearson chi-square test p-value of a sample against a pdf, equal-probability
// bins built from the quantiles of the sample range.
inline double chi2_pvalue_against_pdf(const std::vector<double>& sample,
                                      const std::function<double(double)>& pdf,
                                      int bins = 40) {
    std::vector<double> sorted(sample);
    std::sort(sorted.begin(), sorted.end());
    const double lo = sorted[std::size_t(0.001 * double(sorted.size()))];
    const double hi = sorted[std::size_t(0.999 * double(sorted.size() - 1))];
    std::vector<double> edges(bins + 1);
    for (int b = 0; b <= bins; ++b) edges[b] = lo + (hi - lo) * double(b) / bins;
    std::vector<double> observed(bins, 0.0);
    double inside = 0.0;
    for (double x : sample) {
        if (x < lo || x >= hi) continue;
        int b = int((x - lo) / (hi - lo) * bins);
        b = std::clamp(b, 0, bins - 1);
        observed[b] += 1.0;
        inside += 1.0;
    }
    double chi2 = 0.0;
    int dof = 0;
    for (int b = 0; b < bins; ++b) {
        const auto q = rissec::numerics::integrate(pdf, edges[b], edges[b + 1], 1e-11, 1e-9);
        const double expected = q.value / 1.0 * inside /
                                rissec::numerics::integrate(pdf, lo, hi, 1e-11, 1e-9).value;
        if (expected < 8.0) continue;   // merge-ish: skip sparse bins
        chi2 += (observed[b] - expected) * (observed[b] - expected) / expected;
        ++dof;
    }
    if (dof < 2) return 1.0;
    return rissec::numerics::gamma_q(0.5 * double(dof - 1), 0.5 * chi2);
}

inline bool close_rel(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

inline bool close_abs(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

} // namespace testsup

#endif
