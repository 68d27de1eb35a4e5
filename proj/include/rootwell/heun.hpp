#ifndef ROOTWELL_HEUN_HPP
#define ROOTWELL_HEUN_HPP

#include <span>

#include "rootwell/closed_form.hpp"

namespace rootwell {

// Parameters of the tri-confluent Heun equation
//   u'' + (gamma + delta z + epsilon z^2) u' + (alpha z - q) u = 0.
struct tri_confluent_params {
    double gamma_h = 0.0;
    double delta_h = 0.0;
    double epsilon_h = 0.0;
    double alpha_h = 0.0;
    double q_h = 0.0;
};

// Specialization reproducing the inverse-square-root problem:
// gamma = epsilon = q = 0, delta = branch * 2 sqrt(2m(-E))/hbar,
// alpha = -2 sqrt(2m) v0 / hbar^2.  branch is -1 or +1.
tri_confluent_params heun_params_from_physics(const physical_system& sys,
                                              double energy, int branch);

struct heun_trajectory {
    std::vector<double> zs;
    std::vector<double> u;
    std::vector<double> u_prime;
};

// Integrate the tri-confluent equation from z_grid.front() (must be 0) with
// initial data (u0, du0), recording u and u' at every grid node.  RK4 with
// step-halving error control, local tolerance 1e-12.
heun_trajectory integrate_tch(const tri_confluent_params& p,
                              std::span<const double> z_grid, double u0, double du0);

// psi(x) = exp((gamma z + delta z^2/2 + epsilon z^3/3)/2) u'(z) at z = sqrt(2x),
// cubic-Hermite interpolated from the trajectory (u'' supplied by the ODE).
// Throws range_error if x_grid needs z beyond the trajectory.
grid_function reconstruct_psi(const tri_confluent_params& p, const heun_trajectory& traj,
                              std::span<const double> x_grid);

// w(z) = exp(gamma z + delta z^2/2 + epsilon z^3/3) u'(z), the function obeying
// the derived equation with the extra apparent singularity at z0 = q/alpha.
std::vector<double> trajectory_w(const tri_confluent_params& p, const heun_trajectory& traj);

// Max finite-difference residual of the derived equation
//   w'' - (gamma + delta z + epsilon z^2 + 1/(z - z0)) w' + alpha (z - z0) w = 0
// on a uniform grid over [z_min, z_max] (z_min must exclude a neighbourhood of
// the apparent singularity).  Scaled by the largest term magnitude.
double a3_residual_max(const tri_confluent_params& p, double z_min, double z_max, int points);

// Least-squares fit of the Heun-route basis (trajectories from (1,0) and
// (0,1)) against the closed-form basis over x_grid; returns the max pointwise
// mismatch relative to the max sampled magnitude.
double route_equivalence_residual(const physical_system& sys, double energy, int branch,
                                  std::span<const double> x_grid);

// Best-fit residual of an externally supplied target against the two
// reconstructed Heun-route basis functions on x_grid.
double heun_fit_residual(const physical_system& sys, double energy, int branch,
                         std::span<const double> x_grid, std::span<const double> target);

} // namespace rootwell

#endif
