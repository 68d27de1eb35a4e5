#ifndef ROOTWELL_SPECFUN_HPP
#define ROOTWELL_SPECFUN_HPP

#include "rootwell/errors.hpp"
#include "rootwell/mp_real.hpp"

namespace rootwell::specfun {

// Result of a special-function evaluation with a defensible error bound.
struct eval_result {
    double value = 0.0;
    double abs_error = 0.0;  // estimated absolute error, always finite and >= 0
    int terms_used = 0;      // series terms consumed (summed over sub-series)
    bool escalated = false;  // extended precision was needed
};

// Kummer confluent hypergeometric function 1F1(a;b;z) for real arguments.
// Throws pole_error when b is zero or a negative integer, precision_error if
// the error target is unreachable even in extended precision.
eval_result kummer_1f1(double a, double b, double z);

// Hermite function H_nu(z) of arbitrary real order.  For non-negative integer
// nu this collapses to the classical Hermite polynomial.
eval_result hermite_h(double nu, double z);

// d/dz H_nu(z) = 2 nu H_{nu-1}(z).
eval_result hermite_h_deriv(double nu, double z);

struct log_gamma_result {
    double log_abs = 0.0;  // log|Gamma(x)|, +inf at poles
    int sign = 0;          // sign of Gamma(x); 0 at poles
};

// log|Gamma| and sign, poles signalled through sign = 0.
log_gamma_result log_gamma_real(double x);

namespace detail {

// Extended-precision building blocks, shared with closed_form's escalated
// combination path.  These assume preconditions were already validated.
mp_real kummer_1f1_mp(double a, double b, const mp_real& z, int* terms = nullptr,
                      mp_real* sum_abs = nullptr);
mp_real hermite_h_mp(double nu, const mp_real& z, int* terms = nullptr);

// 1/Gamma(x), exactly zero at the poles of Gamma.
double recip_gamma(double x);
mp_real recip_gamma_mp(double x);

} // namespace detail

} // namespace rootwell::specfun

#endif
