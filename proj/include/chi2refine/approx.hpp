#ifndef CHI2REFINE_APPROX_HPP_
#define CHI2REFINE_APPROX_HPP_

#include "chi2refine/chisq.hpp"

// Refined normal approximations of the chi-square survival function
// (orders 0-3), the classical square-root / cube-root baselines, and the
// previously published error bounds they improve on.

namespace chi2refine {

enum class ApproxOrder : int { order0 = 0, order1 = 1, order2 = 2, order3 = 3 };

ApproxOrder approx_order_from_int(int order);

// Threshold shift coefficients evaluated at delta_a; lambda enters d3 only.
//   d1 = (2/3)(d^2 - 1)
//   d2 = (d - 7 d^3) / (9 sqrt(2))
//   d3 = (219 d^4 + (270 lambda - 14) d^2 - (270 lambda + 13)) / 405
struct ShiftCoefficients {
    double d1;
    double d2;
    double d3;

    // c = 0, d1, d1 + d2/sqrt(r), d1 + d2/sqrt(r) + d3/r for orders 0..3
    double shift(ApproxOrder order, double r) const;
};

ShiftCoefficients shift_coefficients(const Chi2Params& p, double a);

// Psi(delta_{a-c}) with the shift c evaluated at delta_a of the original
// threshold a. Result clamped to [0, 1] (a no-op in exact arithmetic).
double survival_approx(const Chi2Params& p, double a, ApproxOrder order);

// True when lambda <= sqrt(r); outside that range the refined approximations
// degrade and callers should surface a warning rather than an error.
bool lambda_within_validity(const Chi2Params& p);

// Square-root baseline: Psi(sqrt(2a) - sqrt(2r-1)). Central only; needs
// a > 0 and r >= 1/2.
double fisher_sqrt_approx(const Chi2Params& p, double a);

// Cube-root baseline: Psi(((a/r)^{1/3} - (1 - 2/(9r))) / sqrt(2/(9r))).
// Central only, a > 0.
double wilson_hilferty_approx(const Chi2Params& p, double a);

// Published uniform bounds on the order-0 approximation error.
// 2013 bound: 1/sqrt(9 pi r) plus an optional user-supplied C0_tilde/r
// (the universal constant is not specified in print).
double prior_bound_2013(const Chi2Params& p, double c0_tilde = 0.0);

// 2015 bound, valid for r >= 8:
//   (r+4L)/(pi W(1) (r+2L)^2) * (1 + (r^2/32) binom(r,8)^{-1/4})
//   + (r+3L)/(3 sqrt(pi) (r+2L)^{3/2})
double prior_bound_2015(const Chi2Params& p);

}  // namespace chi2refine

#endif  // CHI2REFINE_APPROX_HPP_
