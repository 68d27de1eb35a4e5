#ifndef ROOTWELL_ORACLE_HPP
#define ROOTWELL_ORACLE_HPP

#include <functional>
#include <span>

#include "rootwell/closed_form.hpp"

namespace rootwell {

// Configuration of the Numerov shooting eigensolver.
struct shooting_config {
    double x0 = 1e-6;     // series start point
    double x_max = 60.0;  // right boundary where psi must be small
    int steps = 20000;    // uniform Numerov steps
    double e_lo = 0.0;    // energy bracket, e_lo < e_hi < 0
    double e_hi = 0.0;
    double tol_e = 1e-12;
};

struct residual_report {
    double max_rel_residual = 0.0;
    grid_function grid;   // pointwise relative residuals on the interior
    double scale = 0.0;   // max|psi| * max|2m(E-V)/hbar^2|
};

// Finite-difference check of psi'' + (2m/hbar^2)(E - V) psi = 0 on a uniform
// grid; psi'' from the 5-point central stencil.  Throws grid_error if the
// grid is non-uniform or too coarse for the stencil.
residual_report residual_check(const std::function<double(double)>& psi,
                               const physical_system& sys, double energy,
                               std::span<const double> xs);

// Endpoint value of the Numerov-integrated solution started from the
// Frobenius series psi(x0) = x0 + (8 m v0 / (15 hbar^2)) x0^{5/2}.
double numerov_shoot(const physical_system& sys, double energy,
                     const shooting_config& cfg);

// Eigenvalue by bisection on the sign of the endpoint value across
// [e_lo, e_hi].  Throws bracket_error when the bracket holds no sign change,
// convergence_error on a bisection stall.
double numerov_eigenvalue(const physical_system& sys, const shooting_config& cfg);

// Reasonable defaults for state n at the given energy estimate: x_max at the
// classical turning point plus 12 tail e-foldings, >= 1000 steps.
shooting_config default_shooting_config(const physical_system& sys, double e_estimate,
                                        int steps = 20000);

// W(x) = psi1 psi2' - psi2 psi1' for the two basis solutions c = (1,0) and
// c = (0,1); evaluated in extended precision (the products cancel severely
// where the solutions grow).  Grid must start at x > 0.
grid_function wronskian_scan(const physical_system& sys, double energy,
                             std::span<const double> xs);

// Uniform grid helper: count points from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, int count);
std::vector<double> log_grid(double lo, double hi, int count);

} // namespace rootwell

#endif
