#ifndef CHI2REFINE_LLT_HPP_
#define CHI2REFINE_LLT_HPP_

#include "chi2refine/chisq.hpp"

// Local expansions of the chi-square density against the moment-matched
// normal density: the log and ratio forms of the expansion, the bulk region
// on which they hold, Gaussian upper tail moments, and the residual
// polynomials whose weighted maxima give the asymptotic error constants.

namespace chi2refine {

// x-region where |delta_x / (mean/sd)| <= eta * r^{-1/3}.
struct BulkRegion {
    Chi2Params params;
    double eta;  // in (0, 1)

    BulkRegion(const Chi2Params& p, double eta_);

    // |delta_x| bound implied by the region definition
    double delta_bound() const;
    bool contains(double x) const;
};

// Evaluated polynomial coefficients at a given delta, one per power of
// r^{-1/2}. log form:
//   t_half       = (sqrt2/3) d^3 - sqrt2 d
//   t_one        = -d^4/2 + d^2 - 1/6
//   t_three_half = (2^{3/2}/5) d^5 - (2^{3/2}/3) d^3
// ratio form shares t_half; see ratio_expansion_terms.
struct ExpansionTerms {
    double t_half;
    double t_one;
    double t_three_half;

    double combine(double r) const;  // sum of t_k * r^{-k}
};

ExpansionTerms log_expansion_terms(double delta);
ExpansionTerms ratio_expansion_terms(double delta);

// log( f(x) / (phi(delta_x)/sd) ) truncated at r^{-3/2}.
double log_ratio_expansion(const Chi2Params& p, double x);

// The multiplicative form: 1 + the three ratio-form terms.
double ratio_expansion(const Chi2Params& p, double x);

// Exact counterpart of log_ratio_expansion, through the oracle density.
double exact_log_density_ratio(const Chi2Params& p, double x,
                               const SeriesControl& ctrl = {});

// Gaussian upper tail moment Psi_k(d) = int_d^inf y^k phi(y) dy, closed
// forms for k = 0..9 (k = 8 via the recurrence
// Psi_k = d^{k-1} phi(d) + (k-1) Psi_{k-2}).
double psi_k(int k, double d);

// Residual polynomial left at each order after the lower-order shifts
// cancel their braces; the objective |error_polynomial| * phi is what the
// asymptotic constants maximize.
//   order 0: (sqrt2/3)(d^2 - 1)
//   order 1: (7 d^3 - d)/18
//   order 2: (219 d^4 + (270 lambda - 14) d^2 - (270 lambda + 13))/(405 sqrt2)
double error_polynomial(int order, double delta, double lambda);

// max over y in [-8, 8] of |error_polynomial(order, y, lambda)| * phi(y),
// coarse grid (step 1e-3) plus golden-section refinement; reproducible to
// 1e-9.
double m_constant(int order, double lambda);

}  // namespace chi2refine

#endif  // CHI2REFINE_LLT_HPP_
