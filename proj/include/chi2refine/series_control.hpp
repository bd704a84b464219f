#ifndef CHI2REFINE_SERIES_CONTROL_HPP_
#define CHI2REFINE_SERIES_CONTROL_HPP_

#include <stdexcept>

namespace chi2refine {

// Truncation control shared by every series / continued-fraction
// evaluation in the library.
struct SeriesControl {
    double rel_tol = 1e-14;  // relative truncation tolerance, (0, 1e-6)
    long max_terms = 10000;  // term/iteration cap, >= 100

    void validate() const {
        if (!(rel_tol > 0.0) || !(rel_tol < 1e-6))
            throw std::domain_error("SeriesControl: rel_tol must lie in (0, 1e-6)");
        if (max_terms < 100)
            throw std::domain_error("SeriesControl: max_terms must be >= 100");
    }
};

}  // namespace chi2refine

#endif  // CHI2REFINE_SERIES_CONTROL_HPP_
