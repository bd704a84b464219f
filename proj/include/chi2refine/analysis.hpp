#ifndef CHI2REFINE_ANALYSIS_HPP_
#define CHI2REFINE_ANALYSIS_HPP_

#include <array>
#include <utility>
#include <vector>

#include "chi2refine/approx.hpp"
#include "chi2refine/chisq.hpp"

// Quantitative studies built on the exact oracle: max-error scans of the
// refined approximations, recovery of the asymptotic constants, sample-size
// inversion for energy detection, median asymptotics, and probability-metric
// estimates against the moment-matched normal law.

namespace chi2refine {

struct ScanGrid {
    double lo_delta = -8.0;
    double hi_delta = 8.0;
    int n_points = 4001;
};

struct ErrorScan {
    Chi2Params params;
    ApproxOrder order;
    double max_error;     // max |survival - survival_approx| after refinement
    double argmax_a;      // threshold attaining max_error
    double argmax_delta;  // same point in standardized coordinates
    ScanGrid grid;
};

// Scans |exact - approx| over delta in [lo, hi], then golden-section refines
// around the top local maxima. Beyond |delta| = 8 both tails are below 1e-12
// for r >= 8, so the grid covers the whole real line at that scale.
ErrorScan scan_max_error(const Chi2Params& p, ApproxOrder order,
                         const ScanGrid& grid = {},
                         const SeriesControl& ctrl = {});

// All four orders in one pass; the exact survival values on the grid are
// shared across orders.
std::array<ErrorScan, 4> scan_all_orders(const Chi2Params& p,
                                         const ScanGrid& grid = {},
                                         const SeriesControl& ctrl = {});

// (r, r^{(order+1)/2} * E_order) pairs; the sequence approaches
// m_constant(order, lambda).
std::vector<std::pair<double, double>> constant_recovery(
    int order, double lambda, const std::vector<double>& r_grid,
    const SeriesControl& ctrl = {});

enum class DetectMode {
    leading_bound,  // invert M_order / r^{(order+1)/2} <= target analytically
    exact_scan      // smallest integer r with scan_max_error <= target
};

// Smallest (integer) r achieving the target maximal error.
double min_r_for_error(double target, double lambda, ApproxOrder order,
                       DetectMode mode, const SeriesControl& ctrl = {});

struct MedianStudy {
    Chi2Params params;
    double exact_median;
    double asymptotic_median;  // r + lambda - 2/3
    double residual;           // exact - asymptotic
};

MedianStudy median_study(const Chi2Params& p, const SeriesControl& ctrl = {});

struct MetricEstimates {
    double kolmogorov;       // max_a |F_exact(a) - Phi(delta_a)|
    double total_variation;  // (1/2) int |f - g|
    double hellinger;        // sqrt(1 - int sqrt(f g))
};

// Metrics between the chi-square law and the normal law with the same mean
// and variance; quadrature window mean +/- 40 sd floored at 0, absolute
// accuracy ~1e-8. The normal mass below zero enters total variation
// analytically.
MetricEstimates metric_estimates(const Chi2Params& p,
                                 const SeriesControl& ctrl = {});

}  // namespace chi2refine

#endif  // CHI2REFINE_ANALYSIS_HPP_
