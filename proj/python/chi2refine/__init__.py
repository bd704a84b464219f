"""Refined normal approximations for the chi-square survival function.

The heavy lifting lives in the compiled extension `_core`; this package
re-exports its public surface.
"""

from ._core import (
    BulkRegion,
    Chi2Params,
    ConvergenceError,
    ErrorScan,
    MedianStudy,
    MetricEstimates,
    ShiftCoefficients,
    cdf,
    central_moment,
    constant_recovery,
    delta_of,
    error_polynomial,
    exact_log_density_ratio,
    fisher_sqrt_approx,
    lambda_within_validity,
    log_bessel_i,
    log_gamma,
    log_pdf,
    log_ratio_expansion,
    m_constant,
    median_exact,
    median_study,
    metric_estimates,
    min_r_for_error,
    moment_event_bound,
    normal_cdf,
    normal_pdf,
    normal_sf,
    pdf,
    prior_bound_2013,
    prior_bound_2015,
    psi_k,
    quantile,
    ratio_expansion,
    reg_gamma_upper,
    scan_max_error,
    shift_coefficients,
    survival,
    survival_approx,
    wilson_hilferty_approx,
    x_of,
)
from ._core import __version__

__all__ = [
    "BulkRegion",
    "Chi2Params",
    "ConvergenceError",
    "ErrorScan",
    "MedianStudy",
    "MetricEstimates",
    "ShiftCoefficients",
    "cdf",
    "central_moment",
    "constant_recovery",
    "delta_of",
    "error_polynomial",
    "exact_log_density_ratio",
    "fisher_sqrt_approx",
    "lambda_within_validity",
    "log_bessel_i",
    "log_gamma",
    "log_pdf",
    "log_ratio_expansion",
    "m_constant",
    "median_exact",
    "median_study",
    "metric_estimates",
    "min_r_for_error",
    "moment_event_bound",
    "normal_cdf",
    "normal_pdf",
    "normal_sf",
    "pdf",
    "prior_bound_2013",
    "prior_bound_2015",
    "psi_k",
    "quantile",
    "ratio_expansion",
    "reg_gamma_upper",
    "scan_max_error",
    "shift_coefficients",
    "survival",
    "survival_approx",
    "wilson_hilferty_approx",
    "x_of",
    "__version__",
]
