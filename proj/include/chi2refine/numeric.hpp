#ifndef CHI2REFINE_NUMERIC_HPP_
#define CHI2REFINE_NUMERIC_HPP_

#include <cmath>
#include <cstddef>
#include <vector>

#include "chi2refine/errors.hpp"

// Small numeric kernels shared across modules: golden-section maximization
// and adaptive Gauss-Kronrod quadrature.

namespace chi2refine::numeric {

struct MaxResult {
    double arg;
    double value;
};

// Golden-section search for the maximum of f on [lo, hi], shrinking the
// interval until its width is <= xtol. One function evaluation per
// iteration after the first two.
template <class F>
MaxResult golden_max(F&& f, double lo, double hi, double xtol) {
    static const double invphi = 0.6180339887498948482;  // (sqrt(5)-1)/2
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int iter = 0; iter < 400 && (b - a) > xtol; ++iter) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return fc > fd ? MaxResult{c, fc} : MaxResult{d, fd};
}

namespace detail {

// 15-point Kronrod / 7-point Gauss pair on [-1, 1] (QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kWgk[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
inline constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <class F>
void gk15(F&& f, double a, double b, double* result, double* err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fmid = f(mid);
    double kron = kWgk[7] * fmid;
    double gauss = kWg[3] * fmid;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double fsum = f(mid - dx) + f(mid + dx);
        kron += kWgk[i] * fsum;
        if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
    }
    *result = kron * half;
    *err = std::fabs((kron - gauss) * half);
}

}  // namespace detail

// Adaptive quadrature of f over [a, b] to absolute tolerance abs_tol.
// Bisects the worst interval until the summed error estimate is below
// tolerance; throws convergence_error if the interval budget runs out.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol,
                 std::size_t max_intervals = 20000) {
    if (a == b) return 0.0;
    struct Seg {
        double a, b, val, err;
    };
    std::vector<Seg> segs;
    segs.reserve(256);
    double v, e;
    detail::gk15(f, a, b, &v, &e);
    segs.push_back({a, b, v, e});
    double total_err = e;
    while (total_err > abs_tol) {
        if (segs.size() >= max_intervals)
            throw convergence_error("integrate: interval budget exhausted");
        std::size_t worst = 0;
        for (std::size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        Seg s = segs[worst];
        const double m = 0.5 * (s.a + s.b);
        if (m <= s.a || m >= s.b)
            throw convergence_error("integrate: interval underflow");
        Seg left{s.a, m, 0, 0}, right{m, s.b, 0, 0};
        detail::gk15(f, left.a, left.b, &left.val, &left.err);
        detail::gk15(f, right.a, right.b, &right.val, &right.err);
        total_err += left.err + right.err - s.err;
        segs[worst] = left;
        segs.push_back(right);
    }
    double sum = 0.0;
    for (const Seg& s : segs) sum += s.val;
    return sum;
}

}  // namespace chi2refine::numeric

#endif  // CHI2REFINE_NUMERIC_HPP_
