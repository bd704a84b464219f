#include "chi2refine/approx.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chi2refine/special.hpp"

namespace chi2refine {

namespace {

constexpr double kPi = 3.14159265358979323846264338;
constexpr double kSqrtPi = 1.77245385090551602729816748;
constexpr double kInvNineSqrt2 = 0.078567420131838958283;  // 1/(9 sqrt 2)
constexpr double kLambertW1 = 0.56714329040978387299997;   // W(1)

}  // namespace

ApproxOrder approx_order_from_int(int order) {
    if (order < 0 || order > 3)
        throw std::domain_error("ApproxOrder: order must lie in {0,1,2,3}");
    return static_cast<ApproxOrder>(order);
}

double ShiftCoefficients::shift(ApproxOrder order, double r) const {
    double c = 0.0;
    const int k = static_cast<int>(order);
    if (k >= 1) c += d1;
    if (k >= 2) c += d2 / std::sqrt(r);
    if (k >= 3) c += d3 / r;
    return c;
}

ShiftCoefficients shift_coefficients(const Chi2Params& p, double a) {
    const double d = delta_of(p, a);
    const double d2v = d * d;
    ShiftCoefficients out;
    out.d1 = (2.0 / 3.0) * (d2v - 1.0);
    out.d2 = kInvNineSqrt2 * (d - 7.0 * d * d2v);
    out.d3 = (219.0 * d2v * d2v + (270.0 * p.lambda - 14.0) * d2v -
              (270.0 * p.lambda + 13.0)) /
             405.0;
    return out;
}

double survival_approx(const Chi2Params& p, double a, ApproxOrder order) {
    // the shift is evaluated at delta_a of the original threshold, then the
    // shifted threshold is restandardized with the same (r, lambda)
    const double c = shift_coefficients(p, a).shift(order, p.r);
    const double value = special::normal_sf(delta_of(p, a - c));
    return std::clamp(value, 0.0, 1.0);
}

bool lambda_within_validity(const Chi2Params& p) {
    return p.lambda <= std::sqrt(p.r);
}

double fisher_sqrt_approx(const Chi2Params& p, double a) {
    if (p.lambda > 0.0)
        throw std::domain_error("fisher_sqrt_approx: central distributions only");
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::domain_error("fisher_sqrt_approx: a must be positive");
    if (p.r < 0.5)
        throw std::domain_error("fisher_sqrt_approx: requires r >= 1/2");
    return special::normal_sf(std::sqrt(2.0 * a) - std::sqrt(2.0 * p.r - 1.0));
}

double wilson_hilferty_approx(const Chi2Params& p, double a) {
    if (p.lambda > 0.0)
        throw std::domain_error("wilson_hilferty_approx: central distributions only");
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::domain_error("wilson_hilferty_approx: a must be positive");
    const double spread = std::sqrt(2.0 / (9.0 * p.r));
    const double z = (std::cbrt(a / p.r) - (1.0 - 2.0 / (9.0 * p.r))) / spread;
    return special::normal_sf(z);
}

double prior_bound_2013(const Chi2Params& p, double c0_tilde) {
    if (c0_tilde < 0.0)
        throw std::domain_error("prior_bound_2013: C0_tilde must be nonnegative");
    return 1.0 / std::sqrt(9.0 * kPi * p.r) + c0_tilde / p.r;
}

double prior_bound_2015(const Chi2Params& p) {
    if (p.r < 8.0)
        throw std::domain_error("prior_bound_2015: valid for r >= 8 only");
    const double r = p.r, l = p.lambda;
    const double v = r + 2.0 * l;
    const double log_binom_r8 = special::log_gamma(r + 1.0) -
                                special::log_gamma(9.0) -
                                special::log_gamma(r - 7.0);
    const double first = (r + 4.0 * l) / (kPi * kLambertW1 * v * v) *
                         (1.0 + r * r / 32.0 * std::exp(-0.25 * log_binom_r8));
    const double second = (r + 3.0 * l) / (3.0 * kSqrtPi * v * std::sqrt(v));
    return first + second;
}

}  // namespace chi2refine
