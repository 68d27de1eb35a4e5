#ifndef ROOTWELL_QUADRATURE_HPP
#define ROOTWELL_QUADRATURE_HPP

#include <functional>

#include "rootwell/errors.hpp"

namespace rootwell {

struct quad_result {
    double value = 0.0;
    double abs_error = 0.0;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod (G7, K15) integration of f over [a, b].
// Subdivides until the summed error estimate meets
// max(abs_tol, rel_tol * |integral|).  Throws tolerance_error if the
// subdivision budget is exhausted first.
quad_result integrate(const std::function<double(double)>& f, double a, double b,
                      double rel_tol = 1e-10, double abs_tol = 1e-300);

} // namespace rootwell

#endif
