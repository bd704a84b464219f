#include "chi2refine/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chi2refine/errors.hpp"
#include "chi2refine/llt.hpp"
#include "chi2refine/numeric.hpp"
#include "chi2refine/special.hpp"

namespace chi2refine {

namespace {

void check_grid(const ScanGrid& g) {
    if (!(g.lo_delta < g.hi_delta) || g.n_points < 3)
        throw std::domain_error("ScanGrid: need lo < hi and at least 3 points");
}

// refine the top local maxima of the per-point errors and return the best
ErrorScan refine_scan(const Chi2Params& p, ApproxOrder order,
                      const ScanGrid& grid, const SeriesControl& ctrl,
                      const std::vector<double>& deltas,
                      const std::vector<double>& errs) {
    const auto err_at = [&](double d) {
        const double a = x_of(p, d);
        return std::fabs(survival(p, a, ctrl) - survival_approx(p, a, order));
    };

    const int n = static_cast<int>(deltas.size());
    std::vector<int> peaks;
    for (int i = 0; i < n; ++i) {
        const double left = i > 0 ? errs[i - 1] : -1.0;
        const double right = i + 1 < n ? errs[i + 1] : -1.0;
        if (errs[i] >= left && errs[i] >= right) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(),
              [&](int a, int b) { return errs[a] > errs[b]; });
    if (peaks.size() > 5) peaks.resize(5);

    double best_err = 0.0, best_delta = deltas[0];
    for (int i : peaks) {
        if (errs[i] > best_err) {
            best_err = errs[i];
            best_delta = deltas[i];
        }
        const double lo = deltas[std::max(0, i - 1)];
        const double hi = deltas[std::min(n - 1, i + 1)];
        const auto r = numeric::golden_max(err_at, lo, hi, 1e-9);
        if (r.value > best_err) {
            best_err = r.value;
            best_delta = r.arg;
        }
    }
    return ErrorScan{p, order, best_err, x_of(p, best_delta), best_delta, grid};
}

}  // namespace

ErrorScan scan_max_error(const Chi2Params& p, ApproxOrder order,
                         const ScanGrid& grid, const SeriesControl& ctrl) {
    check_grid(grid);
    const int n = grid.n_points;
    std::vector<double> deltas(n), errs(n);
    const double step = (grid.hi_delta - grid.lo_delta) / (n - 1);
    for (int i = 0; i < n; ++i) {
        deltas[i] = grid.lo_delta + i * step;
        const double a = x_of(p, deltas[i]);
        errs[i] = std::fabs(survival(p, a, ctrl) - survival_approx(p, a, order));
    }
    return refine_scan(p, order, grid, ctrl, deltas, errs);
}

std::array<ErrorScan, 4> scan_all_orders(const Chi2Params& p,
                                         const ScanGrid& grid,
                                         const SeriesControl& ctrl) {
    check_grid(grid);
    const int n = grid.n_points;
    std::vector<double> deltas(n), exact(n);
    const double step = (grid.hi_delta - grid.lo_delta) / (n - 1);
    for (int i = 0; i < n; ++i) {
        deltas[i] = grid.lo_delta + i * step;
        exact[i] = survival(p, x_of(p, deltas[i]), ctrl);
    }
    std::array<ErrorScan, 4> out = {
        ErrorScan{p, ApproxOrder::order0, 0, 0, 0, grid},
        ErrorScan{p, ApproxOrder::order1, 0, 0, 0, grid},
        ErrorScan{p, ApproxOrder::order2, 0, 0, 0, grid},
        ErrorScan{p, ApproxOrder::order3, 0, 0, 0, grid}};
    std::vector<double> errs(n);
    for (int k = 0; k < 4; ++k) {
        const auto order = static_cast<ApproxOrder>(k);
        for (int i = 0; i < n; ++i)
            errs[i] =
                std::fabs(exact[i] - survival_approx(p, x_of(p, deltas[i]), order));
        out[k] = refine_scan(p, order, grid, ctrl, deltas, errs);
    }
    return out;
}

std::vector<std::pair<double, double>> constant_recovery(
    int order, double lambda, const std::vector<double>& r_grid,
    const SeriesControl& ctrl) {
    if (r_grid.empty())
        throw std::domain_error("constant_recovery: r_grid must be nonempty");
    std::vector<std::pair<double, double>> out;
    out.reserve(r_grid.size());
    const double expo = 0.5 * (order + 1);
    for (double r : r_grid) {
        const ErrorScan scan = scan_max_error(
            Chi2Params(r, lambda), approx_order_from_int(order), {}, ctrl);
        out.emplace_back(r, std::pow(r, expo) * scan.max_error);
    }
    return out;
}

double min_r_for_error(double target, double lambda, ApproxOrder order,
                       DetectMode mode, const SeriesControl& ctrl) {
    if (!(target > 0.0) || !(target < 0.5))
        throw std::domain_error("min_r_for_error: target must lie in (0, 0.5)");
    const int k = static_cast<int>(order);
    if (mode == DetectMode::leading_bound) {
        if (k > 2)
            throw std::domain_error(
                "min_r_for_error: order 3 has no leading constant to invert");
        const double m = m_constant(k, lambda);
        const double r_real = std::pow(m / target, 2.0 / (k + 1));
        return std::ceil(r_real - 1e-9);
    }
    const auto err = [&](long r) {
        return scan_max_error(Chi2Params(static_cast<double>(r), lambda), order,
                              {}, ctrl)
            .max_error;
    };
    long hi = 1;
    while (err(hi) > target) {
        hi *= 2;
        if (hi > (1L << 26))
            throw convergence_error("min_r_for_error: scan search exceeded range");
    }
    long lo = hi / 2;  // err(lo) > target when lo >= 1
    while (hi - lo > 1 && lo >= 1) {
        const long mid = lo + (hi - lo) / 2;
        if (err(mid) <= target)
            hi = mid;
        else
            lo = mid;
    }
    return static_cast<double>(hi);
}

MedianStudy median_study(const Chi2Params& p, const SeriesControl& ctrl) {
    const double exact = median_exact(p, ctrl);
    const double asym = p.r + p.lambda - 2.0 / 3.0;
    return MedianStudy{p, exact, asym, exact - asym};
}

MetricEstimates metric_estimates(const Chi2Params& p, const SeriesControl& ctrl) {
    const double sd = p.std_dev();
    const double mu = p.mean();

    MetricEstimates out;
    out.kolmogorov = scan_max_error(p, ApproxOrder::order0, {}, ctrl).max_error;

    const auto normal_density = [&](double x) {
        return special::normal_pdf(delta_of(p, x)) / sd;
    };
    // panel breakpoints concentrate the quadrature where the densities
    // differ; the integrands are smooth except for kinks where f = g
    const double sigmas[] = {-40, -20, -10, -6, -4, -3, -2, -1, -0.5, 0,
                             0.5, 1,   2,   3,  4,  6,  10, 20, 40};
    std::vector<double> knots;
    for (double s : sigmas) {
        const double x = mu + s * sd;
        if (x > 0.0) knots.push_back(x);
    }
    knots.insert(knots.begin(), 0.0);

    // Hellinger needs the Bhattacharyya integral sharp: an absolute error
    // eps in bc becomes eps/(2H) in H
    double tv_int = 0.0, bc = 0.0;
    const double tol_share = 1e-12;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        tv_int += numeric::integrate(
            [&](double x) { return std::fabs(pdf(p, x, ctrl) - normal_density(x)); },
            knots[i], knots[i + 1], tol_share);
        bc += numeric::integrate(
            [&](double x) { return std::sqrt(pdf(p, x, ctrl) * normal_density(x)); },
            knots[i], knots[i + 1], tol_share);
    }
    // normal mass below zero has no chi-square counterpart
    out.total_variation = 0.5 * (tv_int + special::normal_sf(p.mean_sd_ratio()));
    out.hellinger = std::sqrt(std::max(0.0, 1.0 - bc));
    return out;
}

}  // namespace chi2refine
