#include "chi2refine/chisq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "chi2refine/errors.hpp"
#include "chi2refine/special.hpp"

namespace chi2refine {

namespace {

constexpr double kLn2 = 0.6931471805599453094172321;

// Poisson(lambda/2) weights with total retained mass >= 1 - 1e-16,
// collected outward from the modal index so early weights never underflow.
struct PoissonWindow {
    long j_lo;
    std::vector<double> weights;  // weights[k] belongs to j_lo + k
};

PoissonWindow poisson_window(double half_lambda, const SeriesControl& ctrl) {
    const long j0 = static_cast<long>(std::floor(half_lambda));
    const double w0 = std::exp(-half_lambda + j0 * std::log(half_lambda) -
                               special::log_gamma(j0 + 1.0));
    std::vector<double> down, up;
    double w_down = w0, w_up = w0;
    long j_down = j0, j_up = j0;
    double total = w0;
    while (1.0 - total > 1e-16) {
        if (static_cast<long>(down.size() + up.size()) + 1 > ctrl.max_terms)
            throw convergence_error("survival: Poisson window exceeded max_terms");
        const double next_down =
            j_down > 0 ? w_down * j_down / half_lambda : 0.0;
        const double next_up = w_up * half_lambda / (j_up + 1);
        if (next_down > next_up) {
            --j_down;
            w_down = next_down;
            down.push_back(w_down);
        } else {
            ++j_up;
            w_up = next_up;
            up.push_back(w_up);
        }
        total += std::max(next_down, next_up);
        if (next_down == 0.0 && next_up == 0.0) break;
    }
    PoissonWindow win;
    win.j_lo = j_down;
    win.weights.reserve(down.size() + 1 + up.size());
    for (auto it = down.rbegin(); it != down.rend(); ++it)
        win.weights.push_back(*it);
    win.weights.push_back(w0);
    for (double w : up) win.weights.push_back(w);
    return win;
}

// log of sum_j (lambda x / 4)^j / (j! Gamma(r/2 + j)), the series factor of
// the noncentral density.
double log_series_factor(double r, double lambda, double x,
                         const SeriesControl& ctrl) {
    const double larg = std::log(0.25 * lambda * x);
    double lt = -special::log_gamma(0.5 * r);
    double lmax = lt;
    double scaled_sum = 1.0;
    for (long j = 1; j <= ctrl.max_terms; ++j) {
        const double dj = static_cast<double>(j);
        lt += larg - std::log(dj) - std::log(0.5 * r + dj - 1.0);
        if (lt > lmax) {
            scaled_sum = scaled_sum * std::exp(lmax - lt) + 1.0;
            lmax = lt;
        } else {
            scaled_sum += std::exp(lt - lmax);
        }
        const double q = 0.25 * lambda * x / ((dj + 1.0) * (0.5 * r + dj));
        if (q < 1.0) {
            const double tail_rel =
                std::exp(lt - lmax) / scaled_sum * q / (1.0 - q);
            if (tail_rel < ctrl.rel_tol) return lmax + std::log(scaled_sum);
        }
    }
    throw convergence_error("log_pdf_series: series did not converge");
}

}  // namespace

Chi2Params::Chi2Params(double r_, double lambda_) : r(r_), lambda(lambda_) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw std::domain_error("Chi2Params: r must be positive and finite");
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
        throw std::domain_error("Chi2Params: lambda must be nonnegative and finite");
}

StdCoord StdCoord::from_x(const Chi2Params& p, double x) {
    return StdCoord{p, delta_of(p, x)};
}

double StdCoord::to_x() const { return x_of(params, delta); }

double log_pdf(const Chi2Params& p, double x, const SeriesControl& ctrl) {
    ctrl.validate();
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("pdf: x must be positive and finite");
    if (p.lambda == 0.0)
        return (0.5 * p.r - 1.0) * std::log(0.5 * x) - 0.5 * x - kLn2 -
               special::log_gamma(0.5 * p.r);
    const double nu = 0.5 * p.r - 1.0;
    if (nu < -0.5)
        return log_pdf_series(p, x, ctrl);  // Bessel order out of range
    return -kLn2 - 0.5 * (x + p.lambda) + 0.5 * nu * std::log(x / p.lambda) +
           special::log_bessel_i(nu, std::sqrt(p.lambda * x), ctrl);
}

double pdf(const Chi2Params& p, double x, const SeriesControl& ctrl) {
    return std::exp(log_pdf(p, x, ctrl));
}

double log_pdf_series(const Chi2Params& p, double x, const SeriesControl& ctrl) {
    ctrl.validate();
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("pdf: x must be positive and finite");
    const double prefix =
        (0.5 * p.r - 1.0) * std::log(0.5 * x) - 0.5 * (x + p.lambda) - kLn2;
    if (p.lambda == 0.0) return prefix - special::log_gamma(0.5 * p.r);
    return prefix + log_series_factor(p.r, p.lambda, x, ctrl);
}

double survival(const Chi2Params& p, double a, const SeriesControl& ctrl) {
    ctrl.validate();
    if (!std::isfinite(a)) throw std::domain_error("survival: a must be finite");
    if (a <= 0.0) return 1.0;
    const double x = 0.5 * a;
    if (p.lambda == 0.0) return special::reg_gamma_upper(0.5 * p.r, x, ctrl);

    const PoissonWindow win = poisson_window(0.5 * p.lambda, ctrl);
    // Q(s+1, x) = Q(s, x) + x^s e^{-x} / Gamma(s+1); stepping upward only
    // adds positive increments.
    const double lx = std::log(x);
    double s = 0.5 * p.r + static_cast<double>(win.j_lo);
    double q = special::reg_gamma_upper(s, x, ctrl);
    double acc = 0.0;
    for (std::size_t k = 0; k < win.weights.size(); ++k) {
        acc += win.weights[k] * q;
        q += std::exp(special::log_gamma_prefix(s + 1.0, x) - lx);
        if (q > 1.0) q = 1.0;
        s += 1.0;
    }
    return std::min(acc, 1.0);
}

double cdf(const Chi2Params& p, double a, const SeriesControl& ctrl) {
    return 1.0 - survival(p, a, ctrl);
}

double quantile(const Chi2Params& p, double q, const SeriesControl& ctrl) {
    ctrl.validate();
    if (!(q > 0.0) || !(q < 1.0) || !std::isfinite(q))
        throw std::domain_error("quantile: q must lie in (0, 1)");
    const double target = 1.0 - q;  // survival value at the answer
    const double sd = p.std_dev();
    double lo = std::max(1e-12, p.mean() - 20.0 * sd);
    double hi = p.mean() + 20.0 * sd;
    // survival is decreasing; widen the bracket in the rare cases the
    // 20-sigma window misses (tiny r with extreme q)
    int guard = 0;
    while (survival(p, lo, ctrl) < target && lo > 1e-300) {
        lo *= 1e-3;
        if (++guard > 100) throw convergence_error("quantile: no lower bracket");
    }
    guard = 0;
    while (survival(p, hi, ctrl) > target) {
        hi *= 2.0;
        if (++guard > 100) throw convergence_error("quantile: no upper bracket");
    }
    // bisect on the survival value itself: a pure width criterion cannot
    // serve both roots near the origin (r < 1 left tail, a* ~ 1e-16) and
    // roots at 1e6-scale means within the same residual contract
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double s_mid = survival(p, mid, ctrl);
        if (std::fabs(s_mid - target) <= 3e-12) return mid;
        if (s_mid >= target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= lo * 1e-15) break;  // interval at double resolution
    }
    const double a = 0.5 * (lo + hi);
    if (std::fabs(survival(p, a, ctrl) - target) > 1e-11)
        throw convergence_error("quantile: bisection did not reach tolerance");
    return a;
}

double median_exact(const Chi2Params& p, const SeriesControl& ctrl) {
    return quantile(p, 0.5, ctrl);
}

double central_moment(const Chi2Params& p, int n) {
    const double r = p.r, l = p.lambda;
    switch (n) {
        case 1:
            return 0.0;
        case 2:
            return 2.0 * (r + 2.0 * l);
        case 3:
            return 8.0 * (r + 3.0 * l);
        case 4:
            return 12.0 * (r * r + 4.0 * r * (1.0 + l) + 4.0 * l * (4.0 + l));
        case 6:
            return 40.0 * (3.0 * r * r * r + 2.0 * r * r * (26.0 + 9.0 * l) +
                           12.0 * r * (8.0 + 26.0 * l + 3.0 * l * l) +
                           24.0 * l * (24.0 + 18.0 * l + l * l));
        default:
            throw std::domain_error("central_moment: n must be one of {1,2,3,4,6}");
    }
}

double moment_event_bound(const Chi2Params& p, int n, double tail_prob) {
    if (p.lambda > p.r)
        throw std::domain_error("moment_event_bound: requires lambda <= r");
    if (!(tail_prob >= 0.0) || !(tail_prob <= 1.0))
        throw std::domain_error("moment_event_bound: tail_prob must lie in [0, 1]");
    const double root = std::sqrt(tail_prob);
    switch (n) {
        case 1:
            return std::sqrt(6.0) * std::sqrt(p.r) * root;
        case 2:
            return std::sqrt(348.0) * p.r * root;
        case 3:
            return std::sqrt(61960.0) * p.r * std::sqrt(p.r) * root;
        default:
            throw std::domain_error("moment_event_bound: n must be one of {1,2,3}");
    }
}

}  // namespace chi2refine
