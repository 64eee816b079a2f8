#pragma once

#include "itx/quadrature.hpp"

#include <cmath>
#include <sstream>

namespace itx::quad::detail {

inline double checked(double value, double x) {
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "integrand returned " << value << " at x = " << x;
        throw EvaluationError(msg.str());
    }
    return value;
}

}  // namespace itx::quad::detail

namespace itx::quad::detail {

/// int_0^inf g, summed panel by panel between successive breakpoints and
/// accelerated with Wynn's epsilon. `next_break` yields increasing points.
IntegrationResult partitioned(const RealFn& g, const std::function<double()>& next_break,
                              bool fast_envelope, const Tolerance& tol);

}  // namespace itx::quad::detail
