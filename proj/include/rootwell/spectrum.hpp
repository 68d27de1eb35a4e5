#ifndef ROOTWELL_SPECTRUM_HPP
#define ROOTWELL_SPECTRUM_HPP

#include "rootwell/closed_form.hpp"

namespace rootwell {

// Bracket with a guaranteed sign change; plumbing for the root solver.
struct root_bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

enum class state_method { exact, approx };

// A solved bound state of the attractive branch (psi(0) = 0, psi(inf) = 0).
struct bound_state {
    int n = 0;             // ordering index, 1-based
    double a_n = 0.0;      // root of the spectrum equation
    double energy = 0.0;   // E_n < 0
    solution_coefficients coeffs;  // boundary-condition gauge, c2 = 1
    double norm = 0.0;     // L2 normalization constant
    state_method method = state_method::exact;
};

// c1/c2 enforcing psi(0) = 0:
//   [2a 1F1(1-a/2;3/2;2a) + 1F1(-a/2;1/2;2a)] /
//   [sqrt(2a) H_{a-1}(sqrt(2a)) - H_a(sqrt(2a))].
// Throws singular_ratio_error when the denominator vanishes.
double coefficient_ratio(double a);

// Spectrum equation f(a) = sqrt(2a) H_{a-1}(-sqrt(2a)) + H_a(-sqrt(2a));
// bound-state parameters a_n are its roots.
double spectrum_fn(double a);

struct spectrum_fn_eval {
    double value = 0.0;
    double scale = 0.0;      // |sqrt(2a) H_{a-1}| + |H_a|, cancellation scale
    double abs_error = 0.0;
};

spectrum_fn_eval spectrum_fn_scaled(double a);

// Elementary approximation of the n-th root.  refine = false gives the
// closed form n - 1/(2 pi); refine = true solves
// pi a + 1/2 - a exp(-2a) = n pi by fixed-point iteration to |da| < 1e-12.
double approx_root(int n, bool refine);

// Exact root a_n of the spectrum equation, bracketed around approx_root(n)
// and polished until |f| <= 1e-10 * scale.
double solve_exact_root(int n);

// E = -(1/(2m)) (m^2 v0^2 / (hbar a))^{2/3}; inverse of the a(E) map.
double energy_from_a(const physical_system& sys, double a);

// Closed-form approximate spectrum E_n = energy_from_a(sys, n - 1/(2 pi)).
double approx_spectrum(const physical_system& sys, int n);

// Full bound-state assembly: exact root, energy, boundary coefficients and
// L2 normalization (adaptive quadrature plus analytic tail integral).
bound_state solve_bound_state(const physical_system& sys, int n);

// Evaluator for a solved bound state, normalized so that int psi^2 dx = 1.
wavefunction bound_wavefunction(const physical_system& sys, const bound_state& bs);

// Exact left side of the key ratio:
// F(a) = sqrt(2a) H_{a-1}(-sqrt(2a)) / H_a(-sqrt(2a)) + 1.
// Throws pole_error where the denominator Hermite function vanishes.
double eval_F(double a);

// Number of interior sign changes of the bound state on (0, infinity),
// scanned on a log-spaced grid (Sturm ordering check).
int count_nodes(const physical_system& sys, const bound_state& bs);

// int_0^inf psi_n psi_m dx for normalized bound states.
double overlap(const physical_system& sys, const bound_state& bn, const bound_state& bm);

} // namespace rootwell

#endif
