#ifndef CHI2REFINE_ERRORS_HPP_
#define CHI2REFINE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace chi2refine {

// Thrown when an iterative evaluation (series, continued fraction,
// root bracketing) hits its term/iteration cap before reaching the
// requested tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace chi2refine

#endif  // CHI2REFINE_ERRORS_HPP_
