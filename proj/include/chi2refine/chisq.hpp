#ifndef CHI2REFINE_CHISQ_HPP_
#define CHI2REFINE_CHISQ_HPP_

#include <cmath>

#include "chi2refine/series_control.hpp"

// Oracle-grade density, survival function, quantiles and central moments of
// the chi-square distribution with r > 0 degrees of freedom and
// noncentrality lambda >= 0. Every approximation in the library is measured
// against this module.

namespace chi2refine {

struct Chi2Params {
    double r;       // degrees of freedom, > 0 (any positive real)
    double lambda;  // noncentrality, >= 0

    Chi2Params(double r_, double lambda_);

    double mean() const { return r + lambda; }
    double variance() const { return 2.0 * (r + 2.0 * lambda); }
    double std_dev() const { return std::sqrt(variance()); }
    // mean / standard deviation; scales the bulk-region half width
    double mean_sd_ratio() const { return mean() / std_dev(); }
};

// Standardized coordinate delta = (x - mean)/sd together with its inverse.
struct StdCoord {
    Chi2Params params;
    double delta;

    static StdCoord from_x(const Chi2Params& p, double x);
    double to_x() const;
};

inline double delta_of(const Chi2Params& p, double x) {
    return (x - p.mean()) / p.std_dev();
}
inline double x_of(const Chi2Params& p, double delta) {
    return p.mean() + delta * p.std_dev();
}

// Density at x > 0 (log scale). Central branch is the gamma density; the
// noncentral branch goes through ln I_{r/2-1}. For r < 1 the Bessel order
// drops below -1/2, outside log_bessel_i's domain, so that range is routed
// through the ascending-series form instead.
double log_pdf(const Chi2Params& p, double x, const SeriesControl& ctrl = {});
double pdf(const Chi2Params& p, double x, const SeriesControl& ctrl = {});

// Series form of the noncentral density (log scale): gamma-density prefactor
// times sum_j (lambda*x/4)^j / (j! Gamma(r/2+j)). Second algebraic route,
// kept separate so the two branches can be checked against each other.
double log_pdf_series(const Chi2Params& p, double x, const SeriesControl& ctrl = {});

// Survival S(a) = P(X > a) via the Poisson mixture of central upper
// incomplete gamma terms; absolute error <= 1e-12. a <= 0 returns 1.
double survival(const Chi2Params& p, double a, const SeriesControl& ctrl = {});
double cdf(const Chi2Params& p, double a, const SeriesControl& ctrl = {});

// Inverse distribution function; bracketed bisection on survival().
// Satisfies |survival(p, result) - (1 - q)| <= 1e-11.
double quantile(const Chi2Params& p, double q, const SeriesControl& ctrl = {});

double median_exact(const Chi2Params& p, const SeriesControl& ctrl = {});

// Central moments E[(X - mean)^n] in closed form; n in {1, 2, 3, 4, 6}.
double central_moment(const Chi2Params& p, int n);

// Cauchy-Schwarz bound on the n-th central moment restricted to an event
// whose complement has probability tail_prob; n in {1, 2, 3}, requires
// lambda <= r.
double moment_event_bound(const Chi2Params& p, int n, double tail_prob);

}  // namespace chi2refine

#endif  // CHI2REFINE_CHISQ_HPP_
