#ifndef CHI2REFINE_SPECIAL_HPP_
#define CHI2REFINE_SPECIAL_HPP_

#include <cmath>

#include "chi2refine/series_control.hpp"

// Foundation special functions: log-gamma, regularized incomplete gamma,
// modified Bessel function of the first kind (log scale), and the standard
// normal density / distribution / survival functions.
//
// Gamma-type functions return log-domain values wherever the linear value
// can overflow; callers exponentiate at the end.

namespace chi2refine::special {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;  // 1/sqrt(2*pi)
inline constexpr double kInvSqrt2 = 0.7071067811865475244008444;    // 1/sqrt(2)

// ln Gamma(z) for z > 0, Lanczos approximation (g = 607/128, 14 terms).
double log_gamma(double z);

// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x)/Gamma(s).
// Series for x < s + 1, Lentz continued fraction otherwise.
double reg_gamma_upper(double s, double x, const SeriesControl& ctrl = {});

// Regularized lower incomplete gamma P(s, x) = 1 - Q(s, x), evaluated by
// the ascending series on its own route (used as the complement check).
double reg_gamma_lower(double s, double x, const SeriesControl& ctrl = {});

// log of x^s e^{-x} / Gamma(s), arranged so the large terms never cancel.
double log_gamma_prefix(double s, double x);

// ln I_nu(x) via the ascending series summed in log space.
// Requires x > 0 and nu >= -1/2.
double log_bessel_i(double nu, double x, const SeriesControl& ctrl = {});

// Standard normal density phi(z) = exp(-z^2/2)/sqrt(2*pi).
double normal_pdf(double z);

// Standard normal survival Psi(z) = 1 - Phi(z), via erfc.
double normal_sf(double z);

// Standard normal distribution function Phi(z).
double normal_cdf(double z);

}  // namespace chi2refine::special

#endif  // CHI2REFINE_SPECIAL_HPP_
