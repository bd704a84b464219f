// Unit tests for the foundation special functions.
//
// Oracles: exact factorials and half-integer closed forms for log_gamma,
// adaptive Simpson quadrature of the integrands for the incomplete gamma and
// the normal tail, direct series summation for I_nu. Reference values carried
// to 20 digits were generated with an arbitrary-precision evaluator.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "chi2refine/errors.hpp"
#include "chi2refine/special.hpp"
#include "checks.hpp"
#include "oracles.hpp"

using namespace chi2refine;
using namespace chi2refine::special;

TEST_CASE("log_gamma: exact anchors") {
    CHECK_NEAR_ABS(log_gamma(1.0), 0.0, 1e-14);
    CHECK_NEAR_ABS(log_gamma(2.0), 0.0, 1e-14);
    // Gamma(1/2) = sqrt(pi)
    CHECK_NEAR_REL(log_gamma(0.5), 0.57236494292470008707, 1e-14);
    // Gamma(10) = 9!
    CHECK_NEAR_REL(log_gamma(10.0), std::log(362880.0), 1e-14);
    CHECK_NEAR_REL(log_gamma(10.0), 12.801827480081469611, 1e-14);
}

TEST_CASE("log_gamma: wide-range reference values") {
    CHECK_NEAR_REL(log_gamma(1e-3), 6.9071788853838536825, 1e-13);
    CHECK_NEAR_REL(log_gamma(1.5), -0.12078223763524522235, 1e-13);
    CHECK_NEAR_REL(log_gamma(123.456), 469.60554712992946873, 1e-13);
    CHECK_NEAR_REL(log_gamma(1e8), 1742068066.1038347093, 1e-13);
}

TEST_CASE("log_gamma: recurrence ln G(z+1) = ln z + ln G(z)") {
    for (double z = 0.5; z < 100.0; z += 1.0) {
        const double lhs = log_gamma(z + 1.0);
        const double rhs = std::log(z) + log_gamma(z);
        CHECK_NEAR_ABS(lhs, rhs, 1e-12 * std::max(1.0, std::fabs(rhs)));
    }
}

TEST_CASE("log_gamma: domain errors") {
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
    CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(log_gamma(std::numeric_limits<double>::infinity()),
                    std::domain_error);
}

TEST_CASE("reg_gamma_upper: anchors and quadrature oracle") {
    CHECK(reg_gamma_upper(3.7, 0.0) == 1.0);
    CHECK_NEAR_REL(reg_gamma_upper(1.0, 1.0), std::exp(-1.0), 1e-14);

    // quadrature of t^{s-1} e^{-t} / Gamma(s) over [x, far]
    const double s = 2.5, x = 3.0;
    const auto integrand = [s](double t) {
        return std::exp((s - 1.0) * std::log(t) - t - log_gamma(s));
    };
    const double q_oracle = oracles::integrate_simpson(integrand, x, 60.0, 1e-15);
    CHECK_NEAR_ABS(reg_gamma_upper(s, x), q_oracle, 1e-12);
    CHECK_NEAR_REL(reg_gamma_upper(s, x), 0.30621891841327840088, 1e-13);
}

TEST_CASE("reg_gamma_upper: reference values across regimes") {
    CHECK_NEAR_REL(reg_gamma_upper(0.5, 0.2), 0.52708925686553808513, 1e-13);
    CHECK_NEAR_REL(reg_gamma_upper(5000.0, 5050.0), 0.23901532524017510539, 1e-12);
    CHECK_NEAR_REL(reg_gamma_upper(0.001, 0.001), 0.0063123532911397097934, 1e-12);
    CHECK_NEAR_REL(reg_gamma_upper(300.0, 250.0), 0.99883760636894538171, 1e-13);
    CHECK_NEAR_REL(reg_gamma_upper(4.0, 40.0), 4.8888644651810508962e-14, 1e-12);
}

TEST_CASE("reg_gamma: Q + P = 1 with P from the independent lower series") {
    for (double s : {0.3, 1.0, 2.5, 10.0, 123.0, 4000.0}) {
        for (double frac : {0.1, 0.5, 0.9, 1.0, 1.3, 3.0}) {
            const double x = s * frac;
            CHECK_NEAR_ABS(reg_gamma_upper(s, x) + reg_gamma_lower(s, x), 1.0,
                           1e-13);
        }
    }
}

TEST_CASE("reg_gamma_upper: monotone nonincreasing in x") {
    for (double s : {0.7, 4.0, 50.0}) {
        double prev = 1.0;
        for (double x = 0.0; x <= 4.0 * s + 10.0; x += 0.25 * s) {
            const double q = reg_gamma_upper(s, x);
            CHECK(q <= prev + 1e-15);
            CHECK(q >= 0.0);
            CHECK(q <= 1.0);
            prev = q;
        }
    }
}

TEST_CASE("reg_gamma: domain and convergence errors") {
    CHECK_THROWS_AS(reg_gamma_upper(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_gamma_upper(-2.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(reg_gamma_upper(1.0, -0.5), std::domain_error);
    SeriesControl tight;
    tight.max_terms = 100;  // minimum allowed; too few for this argument
    CHECK_THROWS_AS(reg_gamma_upper(5000.0, 5001.0, tight), convergence_error);
}

TEST_CASE("log_bessel_i: half-integer closed form and references") {
    // I_{1/2}(x) = sqrt(2/(pi x)) sinh x
    const double x = 1.0;
    const double closed =
        std::log(std::sqrt(2.0 / (3.14159265358979323846 * x)) * std::sinh(x));
    CHECK_NEAR_REL(log_bessel_i(0.5, x), closed, 1e-13);
    CHECK_NEAR_REL(log_bessel_i(0.5, 1.0), -0.064351991073531798753, 1e-13);

    CHECK_NEAR_ABS(log_bessel_i(0.0, 1.0), std::log(1.2660658778), 1e-9);
    CHECK_NEAR_REL(log_bessel_i(0.0, 1.0), 0.23591435850717864869, 1e-13);

    // small x: first term dominates, ln((x/2)^3 / Gamma(4))
    const double lead = 3.0 * std::log(0.00005) - log_gamma(4.0);
    CHECK_NEAR_REL(log_bessel_i(3.0, 0.0001), lead, 1e-7);
    CHECK_NEAR_REL(log_bessel_i(3.0, 0.0001), -31.502222126211439137, 1e-13);

    CHECK_NEAR_REL(log_bessel_i(10.0, 500.0), 495.87391080378078925, 1e-13);
    CHECK_NEAR_REL(log_bessel_i(200.0, 10000.0), 9992.4758704492657295, 1e-13);
    CHECK_NEAR_REL(log_bessel_i(0.0, 700.0), 695.80569999844344908, 1e-13);
    CHECK_NEAR_REL(log_bessel_i(-0.5, 2.3), 0.97460855738342708608, 1e-13);
    CHECK_NEAR_REL(log_bessel_i(499.5, 1000.0), 873.24014284140589065, 1e-13);
}

TEST_CASE("log_bessel_i: large-argument domain with a raised term cap") {
    SeriesControl wide;
    wide.max_terms = 2'000'000;
    CHECK_NEAR_REL(log_bessel_i(0.0, 1e5, wide), 99993.324599984316463, 1e-13);
    CHECK_NEAR_REL(log_bessel_i(0.0, 1e6, wide), 999992.17330631281325, 1e-13);
    CHECK_NEAR_REL(log_bessel_i(500.0, 1e6, wide), 999992.04830625291736, 1e-13);
}

TEST_CASE("log_bessel_i: direct series cross-check at moderate order") {
    // 30-term direct summation in linear arithmetic
    for (double nu : {0.0, 1.5, 4.0}) {
        for (double x : {0.3, 1.0, 2.5}) {
            double sum = 0.0;
            for (int j = 0; j < 30; ++j) {
                sum += std::exp((nu + 2.0 * j) * std::log(0.5 * x) -
                                log_gamma(j + 1.0) - log_gamma(nu + j + 1.0));
            }
            CHECK_NEAR_REL(log_bessel_i(nu, x), std::log(sum), 1e-12);
        }
    }
}

TEST_CASE("log_bessel_i: recurrence I_{nu-1} - I_{nu+1} = (2 nu / x) I_nu") {
    for (int nu = 1; nu <= 10; ++nu) {
        for (double x : {0.1, 1.0, 10.0, 100.0}) {
            const double lo = std::exp(log_bessel_i(nu - 1.0, x));
            const double mid = std::exp(log_bessel_i(static_cast<double>(nu), x));
            const double hi = std::exp(log_bessel_i(nu + 1.0, x));
            CHECK_NEAR_REL(lo - hi, 2.0 * nu / x * mid, 1e-9);
        }
    }
}

TEST_CASE("log_bessel_i: domain and convergence errors") {
    CHECK_THROWS_AS(log_bessel_i(-0.6, 1.0), std::domain_error);
    CHECK_THROWS_AS(log_bessel_i(0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(log_bessel_i(0.0, -2.0), std::domain_error);
    SeriesControl tight;
    tight.max_terms = 100;
    CHECK_THROWS_AS(log_bessel_i(0.0, 5000.0, tight), convergence_error);
}

TEST_CASE("normal pdf/sf: anchors") {
    CHECK_NEAR_ABS(normal_sf(0.0), 0.5, 1e-16);
    CHECK_NEAR_REL(normal_pdf(0.0), 0.39894228040143267794, 1e-15);
    // root of Psi(z) = 0.025
    CHECK_NEAR_ABS(normal_sf(1.959963985), 0.025, 1e-10);
    CHECK_NEAR_REL(normal_sf(8.0), 6.2209605742717841235e-16, 1e-12);
    CHECK_NEAR_REL(normal_sf(-3.0), 0.99865010196836990547, 1e-14);
    CHECK_NEAR_REL(normal_sf(0.5), 0.30853753872598689636, 1e-14);
}

TEST_CASE("normal sf: quadrature oracle on the tail") {
    for (double z : {-2.0, -0.3, 0.0, 0.7, 1.959963985, 3.5}) {
        const double tail = oracles::integrate_simpson(
            [](double y) { return normal_pdf(y); }, z, 40.0, 1e-15);
        CHECK_NEAR_ABS(normal_sf(z), tail, 1e-12);
        CHECK_NEAR_REL(normal_sf(z), tail, 1e-10);
    }
}

TEST_CASE("normal: symmetry properties") {
    for (double z = -6.0; z <= 6.0; z += 0.37) {
        CHECK(normal_pdf(-z) == normal_pdf(z));
        CHECK_NEAR_ABS(normal_sf(z) + normal_sf(-z), 1.0, 1e-14);
        CHECK_NEAR_ABS(normal_cdf(z), 1.0 - normal_sf(z), 1e-15);
    }
}

TEST_CASE("SeriesControl: invariants enforced") {
    SeriesControl bad;
    bad.rel_tol = 1e-5;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    bad.rel_tol = 1e-14;
    bad.max_terms = 50;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    SeriesControl good;
    CHECK_NOTHROW(good.validate());
}
