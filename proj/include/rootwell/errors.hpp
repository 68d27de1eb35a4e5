#ifndef ROOTWELL_ERRORS_HPP
#define ROOTWELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rootwell {

// Base class for all numerical failures raised by the library.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma-pole in a function argument (e.g. 1F1 with b a non-positive integer).
struct pole_error : numerical_error {
    using numerical_error::numerical_error;
};

// Requested error bound unreachable even after extended-precision escalation.
struct precision_error : numerical_error {
    using numerical_error::numerical_error;
};

// Input outside the mathematical domain of the operation.
struct domain_error : numerical_error {
    using numerical_error::numerical_error;
};

// Root bracketing failed (no sign change after expansion).
struct bracket_error : numerical_error {
    using numerical_error::numerical_error;
};

// Iteration failed to reach its tolerance.
struct convergence_error : numerical_error {
    using numerical_error::numerical_error;
};

// Grid unsuitable for the requested stencil or integrator.
struct grid_error : numerical_error {
    using numerical_error::numerical_error;
};

// Eq.-(13)-type coefficient ratio has a vanishing denominator.
struct singular_ratio_error : numerical_error {
    using numerical_error::numerical_error;
};

// Adaptive integrator could not meet its local tolerance.
struct tolerance_error : numerical_error {
    using numerical_error::numerical_error;
};

// Requested point outside the coverage of a precomputed trajectory.
struct range_error : numerical_error {
    using numerical_error::numerical_error;
};

} // namespace rootwell

#endif
