// Python bindings for the chi2refine core: the exact chi-square oracle, the
// refined survival approximations, the local expansion pieces, and the
// analysis routines.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chi2refine/analysis.hpp"
#include "chi2refine/approx.hpp"
#include "chi2refine/chisq.hpp"
#include "chi2refine/errors.hpp"
#include "chi2refine/llt.hpp"
#include "chi2refine/special.hpp"

namespace py = pybind11;
using namespace chi2refine;

namespace {

SeriesControl ctrl_of(double rel_tol, long max_terms) {
    return SeriesControl{rel_tol, max_terms};
}

ApproxOrder order_of(int order) { return approx_order_from_int(order); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Refined normal approximations for the central and noncentral "
        "chi-square survival function, with an exact oracle and analysis "
        "helpers.";

    py::register_exception<convergence_error>(m, "ConvergenceError",
                                              PyExc_RuntimeError);

    py::class_<Chi2Params>(m, "Chi2Params")
        .def(py::init<double, double>(), py::arg("r"), py::arg("lambda_") = 0.0)
        .def_readonly("r", &Chi2Params::r)
        .def_readonly("lambda_", &Chi2Params::lambda)
        .def_property_readonly("mean", &Chi2Params::mean)
        .def_property_readonly("variance", &Chi2Params::variance)
        .def_property_readonly("std_dev", &Chi2Params::std_dev)
        .def("__repr__", [](const Chi2Params& p) {
            return "Chi2Params(r=" + std::to_string(p.r) +
                   ", lambda_=" + std::to_string(p.lambda) + ")";
        });

    // special functions
    m.def("log_gamma", &special::log_gamma, py::arg("z"));
    m.def(
        "reg_gamma_upper",
        [](double s, double x, double rel_tol, long max_terms) {
            return special::reg_gamma_upper(s, x, ctrl_of(rel_tol, max_terms));
        },
        py::arg("s"), py::arg("x"), py::arg("rel_tol") = 1e-14,
        py::arg("max_terms") = 10000);
    m.def(
        "log_bessel_i",
        [](double nu, double x, double rel_tol, long max_terms) {
            return special::log_bessel_i(nu, x, ctrl_of(rel_tol, max_terms));
        },
        py::arg("nu"), py::arg("x"), py::arg("rel_tol") = 1e-14,
        py::arg("max_terms") = 10000);
    m.def("normal_pdf", &special::normal_pdf, py::arg("z"));
    m.def("normal_sf", &special::normal_sf, py::arg("z"));
    m.def("normal_cdf", &special::normal_cdf, py::arg("z"));

    // coordinates
    m.def("delta_of", &delta_of, py::arg("params"), py::arg("x"));
    m.def("x_of", &x_of, py::arg("params"), py::arg("delta"));

    // exact oracle
    m.def(
        "pdf",
        [](const Chi2Params& p, double x, double rel_tol, long max_terms) {
            return pdf(p, x, ctrl_of(rel_tol, max_terms));
        },
        py::arg("params"), py::arg("x"), py::arg("rel_tol") = 1e-14,
        py::arg("max_terms") = 10000);
    m.def(
        "log_pdf",
        [](const Chi2Params& p, double x, double rel_tol, long max_terms) {
            return log_pdf(p, x, ctrl_of(rel_tol, max_terms));
        },
        py::arg("params"), py::arg("x"), py::arg("rel_tol") = 1e-14,
        py::arg("max_terms") = 10000);
    m.def(
        "survival",
        [](const Chi2Params& p, double a, double rel_tol, long max_terms) {
            return survival(p, a, ctrl_of(rel_tol, max_terms));
        },
        py::arg("params"), py::arg("a"), py::arg("rel_tol") = 1e-14,
        py::arg("max_terms") = 10000);
    m.def(
        "cdf",
        [](const Chi2Params& p, double a, double rel_tol, long max_terms) {
            return cdf(p, a, ctrl_of(rel_tol, max_terms));
        },
        py::arg("params"), py::arg("a"), py::arg("rel_tol") = 1e-14,
        py::arg("max_terms") = 10000);
    m.def(
        "quantile",
        [](const Chi2Params& p, double q, double rel_tol, long max_terms) {
            return quantile(p, q, ctrl_of(rel_tol, max_terms));
        },
        py::arg("params"), py::arg("q"), py::arg("rel_tol") = 1e-14,
        py::arg("max_terms") = 10000);
    m.def(
        "median_exact",
        [](const Chi2Params& p) { return median_exact(p); }, py::arg("params"));
    m.def("central_moment", &central_moment, py::arg("params"), py::arg("n"));
    m.def("moment_event_bound", &moment_event_bound, py::arg("params"),
          py::arg("n"), py::arg("tail_prob"));

    // refined approximations and baselines
    py::class_<ShiftCoefficients>(m, "ShiftCoefficients")
        .def_readonly("d1", &ShiftCoefficients::d1)
        .def_readonly("d2", &ShiftCoefficients::d2)
        .def_readonly("d3", &ShiftCoefficients::d3);
    m.def("shift_coefficients", &shift_coefficients, py::arg("params"),
          py::arg("a"));
    m.def(
        "survival_approx",
        [](const Chi2Params& p, double a, int order) {
            return survival_approx(p, a, order_of(order));
        },
        py::arg("params"), py::arg("a"), py::arg("order"));
    m.def("lambda_within_validity", &lambda_within_validity, py::arg("params"));
    m.def("fisher_sqrt_approx", &fisher_sqrt_approx, py::arg("params"),
          py::arg("a"));
    m.def("wilson_hilferty_approx", &wilson_hilferty_approx, py::arg("params"),
          py::arg("a"));
    m.def("prior_bound_2013", &prior_bound_2013, py::arg("params"),
          py::arg("c0_tilde") = 0.0);
    m.def("prior_bound_2015", &prior_bound_2015, py::arg("params"));

    // local expansion
    py::class_<BulkRegion>(m, "BulkRegion")
        .def(py::init<const Chi2Params&, double>(), py::arg("params"),
             py::arg("eta"))
        .def_property_readonly("delta_bound", &BulkRegion::delta_bound)
        .def("contains", &BulkRegion::contains, py::arg("x"));
    m.def("log_ratio_expansion", &log_ratio_expansion, py::arg("params"),
          py::arg("x"));
    m.def("ratio_expansion", &ratio_expansion, py::arg("params"), py::arg("x"));
    m.def(
        "exact_log_density_ratio",
        [](const Chi2Params& p, double x) { return exact_log_density_ratio(p, x); },
        py::arg("params"), py::arg("x"));
    m.def("psi_k", &psi_k, py::arg("k"), py::arg("d"));
    m.def("error_polynomial", &error_polynomial, py::arg("order"),
          py::arg("delta"), py::arg("lambda_"));
    m.def("m_constant", &m_constant, py::arg("order"), py::arg("lambda_") = 0.0);

    // analysis
    py::class_<ErrorScan>(m, "ErrorScan")
        .def_readonly("params", &ErrorScan::params)
        .def_property_readonly(
            "order", [](const ErrorScan& s) { return static_cast<int>(s.order); })
        .def_readonly("max_error", &ErrorScan::max_error)
        .def_readonly("argmax_a", &ErrorScan::argmax_a)
        .def_readonly("argmax_delta", &ErrorScan::argmax_delta);
    m.def(
        "scan_max_error",
        [](const Chi2Params& p, int order) {
            return scan_max_error(p, order_of(order));
        },
        py::arg("params"), py::arg("order"));
    m.def(
        "constant_recovery",
        [](int order, double lambda, const std::vector<double>& r_grid) {
            return constant_recovery(order, lambda, r_grid);
        },
        py::arg("order"), py::arg("lambda_"), py::arg("r_grid"));
    m.def(
        "min_r_for_error",
        [](double target, double lambda, int order, const std::string& mode) {
            DetectMode dm;
            if (mode == "leading")
                dm = DetectMode::leading_bound;
            else if (mode == "scan")
                dm = DetectMode::exact_scan;
            else
                throw std::invalid_argument("mode must be 'leading' or 'scan'");
            return min_r_for_error(target, lambda, order_of(order), dm);
        },
        py::arg("target"), py::arg("lambda_"), py::arg("order"),
        py::arg("mode") = "leading");
    py::class_<MedianStudy>(m, "MedianStudy")
        .def_readonly("exact_median", &MedianStudy::exact_median)
        .def_readonly("asymptotic_median", &MedianStudy::asymptotic_median)
        .def_readonly("residual", &MedianStudy::residual);
    m.def(
        "median_study", [](const Chi2Params& p) { return median_study(p); },
        py::arg("params"));
    py::class_<MetricEstimates>(m, "MetricEstimates")
        .def_readonly("kolmogorov", &MetricEstimates::kolmogorov)
        .def_readonly("total_variation", &MetricEstimates::total_variation)
        .def_readonly("hellinger", &MetricEstimates::hellinger);
    m.def(
        "metric_estimates",
        [](const Chi2Params& p) { return metric_estimates(p); },
        py::arg("params"));

#ifdef VERSION_INFO
#define STR2(x) #x
#define STR(x) STR2(x)
    m.attr("__version__") = STR(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
