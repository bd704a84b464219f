#include "chi2refine/llt.hpp"

#include <cmath>
#include <stdexcept>

#include "chi2refine/numeric.hpp"
#include "chi2refine/special.hpp"

namespace chi2refine {

namespace {

constexpr double kSqrt2 = 1.41421356237309504880169;
constexpr double kLn2Pi = 1.83787706640934548356066;

}  // namespace

BulkRegion::BulkRegion(const Chi2Params& p, double eta_) : params(p), eta(eta_) {
    if (!(eta > 0.0) || !(eta < 1.0))
        throw std::domain_error("BulkRegion: eta must lie in (0, 1)");
}

double BulkRegion::delta_bound() const {
    return params.mean_sd_ratio() * eta * std::pow(params.r, -1.0 / 3.0);
}

bool BulkRegion::contains(double x) const {
    if (!(x > 0.0)) return false;
    return std::fabs(delta_of(params, x)) <= delta_bound();
}

double ExpansionTerms::combine(double r) const {
    const double rsqrt = std::sqrt(r);
    return t_half / rsqrt + t_one / r + t_three_half / (r * rsqrt);
}

ExpansionTerms log_expansion_terms(double d) {
    const double d2 = d * d, d3 = d2 * d, d4 = d2 * d2, d5 = d4 * d;
    ExpansionTerms t;
    t.t_half = (kSqrt2 / 3.0) * d3 - kSqrt2 * d;
    t.t_one = -0.5 * d4 + d2 - 1.0 / 6.0;
    t.t_three_half = (2.0 * kSqrt2 / 5.0) * d5 - (2.0 * kSqrt2 / 3.0) * d3;
    return t;
}

ExpansionTerms ratio_expansion_terms(double d) {
    const double d2 = d * d, d3 = d2 * d, d4 = d2 * d2, d5 = d4 * d;
    const double d6 = d4 * d2, d7 = d6 * d, d9 = d7 * d2;
    ExpansionTerms t;
    t.t_half = (kSqrt2 / 3.0) * d3 - kSqrt2 * d;
    t.t_one = d6 / 9.0 - 7.0 / 6.0 * d4 + 2.0 * d2 - 1.0 / 6.0;
    t.t_three_half = (kSqrt2 / 81.0) * d9 - 5.0 / (9.0 * kSqrt2) * d7 +
                     47.0 / (15.0 * kSqrt2) * d5 - 37.0 / (9.0 * kSqrt2) * d3 +
                     d / (3.0 * kSqrt2);
    return t;
}

double log_ratio_expansion(const Chi2Params& p, double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("log_ratio_expansion: x must be positive");
    return log_expansion_terms(delta_of(p, x)).combine(p.r);
}

double ratio_expansion(const Chi2Params& p, double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("ratio_expansion: x must be positive");
    return 1.0 + ratio_expansion_terms(delta_of(p, x)).combine(p.r);
}

double exact_log_density_ratio(const Chi2Params& p, double x,
                               const SeriesControl& ctrl) {
    const double d = delta_of(p, x);
    const double log_normal = -0.5 * d * d - 0.5 * kLn2Pi - std::log(p.std_dev());
    return log_pdf(p, x, ctrl) - log_normal;
}

double psi_k(int k, double d) {
    const double phi = special::normal_pdf(d);
    const double d2 = d * d;
    switch (k) {
        case 0:
            return special::normal_sf(d);
        case 1:
            return phi;
        case 2:
            return d * phi + special::normal_sf(d);
        case 3:
            return (2.0 + d2) * phi;
        case 4:
            return (3.0 * d + d2 * d) * phi + 3.0 * special::normal_sf(d);
        case 5:
            return (8.0 + 4.0 * d2 + d2 * d2) * phi;
        case 6:
            return (15.0 * d + 5.0 * d2 * d + d2 * d2 * d) * phi +
                   15.0 * special::normal_sf(d);
        case 7:
            return (48.0 + 24.0 * d2 + 6.0 * d2 * d2 + d2 * d2 * d2) * phi;
        case 8:
            // not in the closed-form list; recurrence
            // Psi_k = d^{k-1} phi + (k-1) Psi_{k-2}
            return d2 * d2 * d2 * d * phi + 7.0 * psi_k(6, d);
        case 9:
            return (384.0 + 192.0 * d2 + 48.0 * d2 * d2 + 8.0 * d2 * d2 * d2 +
                    d2 * d2 * d2 * d2) *
                   phi;
        default:
            throw std::domain_error("psi_k: k must lie in {0,...,9}");
    }
}

double error_polynomial(int order, double delta, double lambda) {
    const double d2 = delta * delta;
    switch (order) {
        case 0:
            return (kSqrt2 / 3.0) * (d2 - 1.0);
        case 1:
            return (7.0 * d2 * delta - delta) / 18.0;
        case 2:
            return (219.0 * d2 * d2 + (270.0 * lambda - 14.0) * d2 -
                    (270.0 * lambda + 13.0)) /
                   (405.0 * kSqrt2);
        default:
            throw std::domain_error("error_polynomial: order must lie in {0,1,2}");
    }
}

double m_constant(int order, double lambda) {
    const auto objective = [order, lambda](double y) {
        return std::fabs(error_polynomial(order, y, lambda)) *
               special::normal_pdf(y);
    };
    // coarse grid, then golden-section around the best cell; outside [-8, 8]
    // the objective is below 1e-12 by Gaussian decay
    const double step = 1e-3;
    double best_y = -8.0;
    double best = objective(best_y);
    for (double y = -8.0 + step; y <= 8.0 + 0.5 * step; y += step) {
        const double v = objective(y);
        if (v > best) {
            best = v;
            best_y = y;
        }
    }
    const auto refined =
        numeric::golden_max(objective, best_y - step, best_y + step, 1e-10);
    return refined.value > best ? refined.value : best;
}

}  // namespace chi2refine
