// Unit tests for the exact chi-square oracle module.
//
// Oracles here: adaptive Simpson quadrature of the density (with a log
// substitution so the x -> 0 singularity at r < 2 is benign), the Poisson
// mixture of central densities, Erlang closed forms for even central r, and
// a fixed-seed Monte Carlo moment check. 20-digit reference values come from
// an arbitrary-precision evaluator.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "chi2refine/chisq.hpp"
#include "chi2refine/errors.hpp"
#include "checks.hpp"
#include "oracles.hpp"

using namespace chi2refine;

namespace {

// integral of f over consecutive panels
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& knots, double tol) {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        sum += oracles::integrate_simpson(f, knots[i], knots[i + 1],
                                          tol / (knots.size() - 1));
    return sum;
}

// total mass of the density over (0, hi] via x = exp(t)
double density_mass(const Chi2Params& p, double hi, double tol) {
    const auto g = [&](double t) {
        const double x = std::exp(t);
        return pdf(p, x) * x;
    };
    std::vector<double> knots = {-240.0, -120.0, -60.0, -30.0, -15.0, -6.0, -2.0, 0.0};
    const double t_hi = std::log(hi);
    for (double s = -4.0; s <= 4.01; s += 1.0) {
        const double x = p.mean() + s * p.std_dev();
        if (x > 1.5 && std::log(x) < t_hi - 1e-9) knots.push_back(std::log(x));
    }
    knots.push_back(t_hi);
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    return integrate_panels(g, knots, tol);
}

// tail integral of the density over [a, hi] in plain x coordinates, a > 0
double density_tail(const Chi2Params& p, double a, double hi, double tol) {
    std::vector<double> knots = {a};
    for (double s = -4.0; s <= 4.01; s += 1.0) {
        const double x = p.mean() + s * p.std_dev();
        if (x > a + 1e-9 && x < hi - 1e-9) knots.push_back(x);
    }
    knots.push_back(hi);
    std::sort(knots.begin(), knots.end());
    return integrate_panels([&](double x) { return pdf(p, x); }, knots, tol);
}

}  // namespace

TEST_CASE("Chi2Params: validation and moments of the identity") {
    CHECK_THROWS_AS(Chi2Params(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(Chi2Params(-3.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(Chi2Params(2.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(Chi2Params(std::nan(""), 0.0), std::domain_error);
    CHECK_THROWS_AS(Chi2Params(2.0, std::numeric_limits<double>::infinity()),
                    std::domain_error);

    const Chi2Params p(3.0, 4.0);
    CHECK(p.mean() == 7.0);
    CHECK(p.variance() == 22.0);
    CHECK(p.std_dev() == doctest::Approx(std::sqrt(22.0)));
}

TEST_CASE("StdCoord: round trip and centering") {
    const Chi2Params p(7.0, 2.5);
    CHECK(StdCoord::from_x(p, p.mean()).delta == 0.0);
    for (double x : {0.5, 3.0, 9.5, 40.0, 1e4}) {
        const StdCoord c = StdCoord::from_x(p, x);
        CHECK_NEAR_REL(c.to_x(), x, 1e-14);
    }
    CHECK(x_of(p, delta_of(p, 12.0)) == doctest::Approx(12.0).epsilon(1e-14));
}

TEST_CASE("pdf: closed-form anchors") {
    // (x/2)^0 = 1 at r = 2
    CHECK_NEAR_REL(pdf(Chi2Params(2, 0), 2.0), 0.5 * std::exp(-1.0), 1e-13);
    CHECK_NEAR_REL(pdf(Chi2Params(2, 0), 2.0), 0.1839397205857211608, 1e-13);
    // direct substitution at r = 4
    CHECK_NEAR_REL(pdf(Chi2Params(4, 0), 4.0), std::exp(-2.0), 1e-13);
    CHECK_NEAR_REL(pdf(Chi2Params(4, 0), 4.0), 0.13533528323661269189, 1e-13);
}

TEST_CASE("pdf: noncentral values against the Poisson-mixture oracle") {
    struct Case {
        double r, lambda, x;
    };
    const Case cases[] = {{3, 2, 5},     {0.5, 0.3, 1.2}, {100, 10, 95},
                          {5, 0.5, 3.2}, {1, 7, 4.4},     {20, 1, 33}};
    for (const auto& c : cases) {
        const Chi2Params p(c.r, c.lambda);
        const double oracle = oracles::mixture_pdf(c.r, c.lambda, c.x);
        CHECK_NEAR_ABS(pdf(p, c.x), oracle, 1e-11);
        CHECK_NEAR_REL(pdf(p, c.x), oracle, 1e-10);
    }
    CHECK_NEAR_REL(pdf(Chi2Params(3, 2), 5.0), 0.10044198178668671815, 1e-12);
    CHECK_NEAR_REL(pdf(Chi2Params(100, 10), 95.0), 0.017753069153425947864, 1e-12);
    CHECK_NEAR_REL(pdf(Chi2Params(5, 0.5), 3.2), 0.1399713132864046452, 1e-12);
    CHECK_NEAR_REL(pdf(Chi2Params(0.5, 0), 0.25), 0.57892140748045988587, 1e-12);
}

TEST_CASE("pdf: Bessel branch agrees with the series branch for lambda > 0") {
    for (double r : {1.0, 2.5, 7.0, 100.0}) {
        for (double lambda : {0.5, 2.0, 10.0}) {
            const Chi2Params p(r, lambda);
            for (double s = -2.0; s <= 2.01; s += 0.5) {
                const double x = p.mean() + s * p.std_dev();
                if (x <= 0.0) continue;
                CHECK_NEAR_REL(std::exp(log_pdf(p, x)),
                               std::exp(log_pdf_series(p, x)), 1e-10);
            }
        }
    }
}

TEST_CASE("pdf: domain errors") {
    const Chi2Params p(3.0, 1.0);
    CHECK_THROWS_AS(pdf(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(pdf(p, -1.0), std::domain_error);
    CHECK_THROWS_AS(pdf(p, std::nan("")), std::domain_error);
}

TEST_CASE("pdf: integrates to one across shapes and noncentralities") {
    for (double r : {0.5, 1.0, 2.0, 5.0, 20.0, 100.0}) {
        for (double lambda : {0.0, 0.5, 2.0, 10.0}) {
            const Chi2Params p(r, lambda);
            const double hi = p.mean() + 40.0 * p.std_dev();
            const double mass = density_mass(p, hi, 1e-11);
            CHECK_NEAR_ABS(mass, 1.0, 1e-9);
        }
    }
}

TEST_CASE("survival: anchors and edge thresholds") {
    CHECK_NEAR_REL(survival(Chi2Params(2, 0), 2.0), std::exp(-1.0), 1e-13);
    CHECK(survival(Chi2Params(5, 3), 0.0) == 1.0);
    CHECK(survival(Chi2Params(5, 3), -7.5) == 1.0);
    // Erlang closed form at r = 4: e^{-2} (1 + 2)
    CHECK_NEAR_REL(survival(Chi2Params(4, 0), 4.0), 3.0 * std::exp(-2.0), 1e-13);
    CHECK_NEAR_REL(survival(Chi2Params(4, 0), 4.0), 0.40600584970983807568, 1e-13);
    CHECK_THROWS_AS(survival(Chi2Params(2, 0), std::nan("")), std::domain_error);
}

TEST_CASE("survival: reference values (noncentral and large r)") {
    CHECK_NEAR_ABS(survival(Chi2Params(3, 2), 5.0), 0.40659481991684437291, 1e-12);
    CHECK_NEAR_ABS(survival(Chi2Params(0.5, 0.3), 1.7), 0.15164563388765611071,
                   1e-12);
    CHECK_NEAR_ABS(survival(Chi2Params(100, 10), 120.0), 0.25037981275999199724,
                   1e-12);
    CHECK_NEAR_ABS(survival(Chi2Params(7, 4.5), 0.8), 0.99967312783919872749,
                   1e-12);
    CHECK_NEAR_ABS(survival(Chi2Params(1000, 5), 1100.0),
                   0.019444349446384497007, 1e-12);
}

TEST_CASE("survival: Erlang closed form matches the mixture route, even r") {
    for (int r = 2; r <= 20; r += 2) {
        const Chi2Params p(static_cast<double>(r), 0.0);
        for (double frac : {0.2, 0.7, 1.0, 1.5, 2.5}) {
            const double a = frac * r;
            CHECK_NEAR_ABS(survival(p, a), oracles::erlang_survival(r, a), 1e-11);
        }
    }
}

TEST_CASE("survival: equals the quadrature tail across the parameter grid") {
    for (double r : {0.5, 1.0, 2.0, 5.0, 20.0, 100.0}) {
        for (double lambda : {0.0, 0.5, 2.0, 10.0}) {
            const Chi2Params p(r, lambda);
            const double hi = p.mean() + 40.0 * p.std_dev();
            for (double s : {-2.0, 0.0, 2.0}) {
                const double a = p.mean() + s * p.std_dev();
                if (a <= 0.0) continue;
                const double tail = density_tail(p, a, hi, 1e-11);
                CHECK_NEAR_ABS(survival(p, a), tail, 1e-9);
            }
        }
    }
}

TEST_CASE("survival: Poisson window respects the term cap") {
    SeriesControl tight;
    tight.max_terms = 100;
    CHECK_THROWS_AS(survival(Chi2Params(2.0, 1e6), 1e6, tight), convergence_error);
}

TEST_CASE("quantile: closed forms and round trips") {
    // solve e^{-a/2} = 1/2
    CHECK_NEAR_ABS(quantile(Chi2Params(2, 0), 0.5), 2.0 * std::log(2.0), 1e-10);
    CHECK_NEAR_ABS(quantile(Chi2Params(1, 0), 0.5), 0.45493642311957275194, 1e-10);
    CHECK_NEAR_ABS(quantile(Chi2Params(10, 1), 0.5), 10.285182180704638291, 1e-9);
    CHECK_NEAR_ABS(quantile(Chi2Params(5, 2), 0.95), 15.094436225836659408, 1e-9);
    CHECK_NEAR_ABS(quantile(Chi2Params(100, 0), 0.5), 99.334129235988455754, 1e-9);
    CHECK_NEAR_ABS(quantile(Chi2Params(7.5, 3), 0.5), 9.6863536647233024524, 1e-9);

    const Chi2Params p(6.5, 1.25);
    for (double a0 : {2.0, 6.0, 11.0, 20.0}) {
        const double q = 1.0 - survival(p, a0);
        CHECK_NEAR_ABS(quantile(p, q), a0, 1e-9 * std::max(1.0, a0));
    }
}

TEST_CASE("quantile: extreme tails keep the survival residual small") {
    struct Case {
        double r, lambda, q;
    };
    // the r = 0.5 left tail puts the root near 1e-16; the r = 1e6 case
    // checks the residual contract at large scale
    const Case cases[] = {{3, 1, 1e-10},      {3, 1, 1.0 - 1e-10},
                          {0.5, 0, 1e-4},     {0.5, 0, 1.0 - 1e-8},
                          {1e6, 1, 0.5},      {40, 3, 0.999}};
    for (const auto& c : cases) {
        const Chi2Params p(c.r, c.lambda);
        const double a = quantile(p, c.q);
        CHECK(a > 0.0);
        CHECK_MESSAGE(std::fabs(survival(p, a) - (1.0 - c.q)) <= 1e-11,
                      "r=" << c.r << " lambda=" << c.lambda << " q=" << c.q
                           << " a=" << a);
    }
}

TEST_CASE("quantile: monotone in q and domain errors") {
    const Chi2Params p(4.2, 0.7);
    double prev = 0.0;
    for (double q = 0.05; q < 1.0; q += 0.05) {
        const double a = quantile(p, q);
        CHECK(a > prev);
        prev = a;
    }
    CHECK_THROWS_AS(quantile(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(quantile(p, 1.0), std::domain_error);
    CHECK_THROWS_AS(quantile(p, -0.2), std::domain_error);
}

TEST_CASE("median_exact: anchors and the large-r trend") {
    CHECK_NEAR_ABS(median_exact(Chi2Params(2, 0)), 2.0 * std::log(2.0), 1e-10);
    CHECK_NEAR_ABS(median_exact(Chi2Params(1, 0)), 0.4549364231, 1e-9);
    // median ~ r + lambda - 2/3 within 1/sqrt(r) at large r
    for (double r : {100.0, 10000.0}) {
        const double med = median_exact(Chi2Params(r, 0));
        CHECK(std::fabs(med - (r - 2.0 / 3.0)) < 1.0 / std::sqrt(r));
    }
}

TEST_CASE("central_moment: stated closed forms") {
    CHECK(central_moment(Chi2Params(5, 0), 2) == 10.0);
    CHECK(central_moment(Chi2Params(1, 0), 3) == 8.0);
    CHECK(central_moment(Chi2Params(2, 1), 4) == 480.0);
    CHECK(central_moment(Chi2Params(3, 4), 1) == 0.0);
    // n = 6 spot check by substitution
    const double r = 2.0, l = 1.0;
    const double m6 = 40.0 * (3 * r * r * r + 2 * r * r * (26 + 9 * l) +
                              12 * r * (8 + 26 * l + 3 * l * l) +
                              24 * l * (24 + 18 * l + l * l));
    CHECK(central_moment(Chi2Params(r, l), 6) == m6);
    CHECK_THROWS_AS(central_moment(Chi2Params(2, 0), 5), std::domain_error);
    CHECK_THROWS_AS(central_moment(Chi2Params(2, 0), 0), std::domain_error);
}

TEST_CASE("central_moment: quadrature cross-check for n in {2,3,4,6}") {
    for (const auto& pr : {Chi2Params(3.0, 0.0), Chi2Params(7.5, 2.5)}) {
        const double hi = pr.mean() + 40.0 * pr.std_dev();
        for (int n : {2, 3, 4, 6}) {
            const auto g = [&](double t) {
                const double x = std::exp(t);
                return std::pow(x - pr.mean(), n) * pdf(pr, x) * x;
            };
            std::vector<double> knots = {-60.0, -20.0, -6.0, -2.0, 0.0};
            for (double s = -4.0; s <= 4.01; s += 0.5) {
                const double x = pr.mean() + s * pr.std_dev();
                if (x > 1.2 && std::log(x) < std::log(hi) - 1e-9)
                    knots.push_back(std::log(x));
            }
            knots.push_back(std::log(hi));
            std::sort(knots.begin(), knots.end());
            const double scale = std::max(1.0, std::fabs(central_moment(pr, n)));
            const double est = integrate_panels(g, knots, 1e-10 * scale);
            CHECK_NEAR_REL(central_moment(pr, n), est, 1e-8);
        }
    }
}

TEST_CASE("central_moment: Monte Carlo check, 1e6 draws, 5 batch SEs") {
    const int r = 5;
    const double lambda = 1.69;  // mean shift 1.3 on the first coordinate
    const Chi2Params p(static_cast<double>(r), lambda);
    constexpr int kBatches = 100, kPerBatch = 10000;
    oracles::NormalSampler rng(0x5eedcafe1234ULL);

    for (int n : {2, 3, 4}) {
        std::vector<double> batch_means(kBatches, 0.0);
        oracles::NormalSampler local(0x5eedcafe1234ULL + n);
        for (int b = 0; b < kBatches; ++b) {
            double acc = 0.0;
            for (int i = 0; i < kPerBatch; ++i) {
                const double x = oracles::chi2_draw(local, r, lambda);
                acc += std::pow(x - p.mean(), n);
            }
            batch_means[b] = acc / kPerBatch;
        }
        double mean = 0.0;
        for (double m : batch_means) mean += m;
        mean /= kBatches;
        double var = 0.0;
        for (double m : batch_means) var += (m - mean) * (m - mean);
        var /= (kBatches - 1);
        const double se = std::sqrt(var / kBatches);
        CHECK_NEAR_ABS(mean, central_moment(p, n), 5.0 * se);
    }
    (void)rng;
}

TEST_CASE("moment_event_bound: substitution anchors and domain") {
    CHECK_NEAR_REL(moment_event_bound(Chi2Params(4, 0), 1, 0.25), std::sqrt(6.0),
                   1e-14);
    for (int n : {1, 2, 3})
        CHECK(moment_event_bound(Chi2Params(7, 2), n, 0.0) == 0.0);
    CHECK_NEAR_REL(moment_event_bound(Chi2Params(9, 1), 2, 0.01),
                   std::sqrt(348.0) * 9.0 * 0.1, 1e-14);
    CHECK_THROWS_AS(moment_event_bound(Chi2Params(2, 3), 1, 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(moment_event_bound(Chi2Params(2, 1), 4, 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(moment_event_bound(Chi2Params(2, 1), 1, 1.5),
                    std::domain_error);
}
