#ifndef ROOTWELL_CLOSED_FORM_HPP
#define ROOTWELL_CLOSED_FORM_HPP

#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "rootwell/errors.hpp"
#include "rootwell/mp_real.hpp"

namespace rootwell {

// The problem definition: particle of mass m, action scale hbar, potential
// strength v0 of V(x) = v0 / sqrt(x) on the half line x > 0.
struct physical_system {
    double mass = 1.0;
    double hbar = 1.0;
    double v0 = -1.0;
};

// Throws domain_error unless mass > 0, hbar > 0, v0 != 0.
void validate(const physical_system& sys);

// Bridge between an energy E < 0 and the dimensionless parameters of the
// closed-form solution: delta (inverse length) and a (dimensionless).
struct spectral_point {
    double energy = 0.0;
    double delta = 0.0;
    double a = 0.0;
};

spectral_point spectral_point_for(const physical_system& sys, double energy);

// Coefficient pair selecting a member of the two-dimensional solution space.
struct solution_coefficients {
    double c1 = 0.0;
    double c2 = 0.0;
};

// A sampled real function on a strictly increasing non-negative grid.
struct grid_function {
    std::vector<double> xs;
    std::vector<double> values;
    std::vector<std::pair<std::string, std::string>> meta;
};

void validate(const grid_function& g);

// y = sgn(v0) sqrt(delta x) + sqrt(2a); the scaled/shifted argument of the
// special functions.  v0_sign must be -1 or +1; x >= 0.
double map_y(const spectral_point& sp, int v0_sign, double x);

struct u_eval {
    double u = 0.0;
    double dudy = 0.0;
    bool escalated = false;
};

// u(y) = exp(-sqrt(2a) y) (c1 H_a(y) + c2 1F1(-a/2; 1/2; y^2)) and du/dy.
u_eval eval_u_and_dudy(const spectral_point& sp, const solution_coefficients& c,
                       double y);

struct psi_eval {
    double psi = 0.0;
    double dpsi_dx = 0.0;
    bool escalated = false;
};

// Closed-form evaluator for one (system, energy, coefficients) triple.
// psi(x) = exp(-delta x / 2) du/dy.  For the attractive branch the two terms
// of u individually grow like exp(y^2) deep in the tail; past the switch
// point sqrt(delta x) - sqrt(2a) > 6 the evaluator continues with a matched
// exponential-tail form C exp(-delta x/2 - (4 m v0 /(hbar^2 delta)) sqrt(x)) x^sigma
// whose (C, sigma) are fixed by value and log-derivative at the switch point.
class wavefunction {
  public:
    wavefunction(const physical_system& sys, const spectral_point& sp,
                 const solution_coefficients& c);

    double value(double x) const;
    psi_eval value_and_derivative(double x) const;

    // First x beyond which the matched tail form is used (+inf for v0 > 0).
    double x_switch() const { return x_switch_; }

    // Relative ODE residual of the matched tail form, sampled past the switch
    // point; meaningful only once the tail has been matched.
    double tail_match_residual() const;

    const spectral_point& point() const { return sp_; }
    const solution_coefficients& coefficients() const { return c_; }

  private:
    struct tail_params {
        double log_scale = 0.0;  // log of |C|
        int sign = 1;
        double sigma = 0.0;
        double residual = 0.0;
        bool valid = false;
    };

    const tail_params& tail() const;
    psi_eval exact_eval(double x) const;
    psi_eval tail_eval(double x) const;

    physical_system sys_;
    spectral_point sp_;
    solution_coefficients c_;
    int v0_sign_;
    double x_switch_;
    double kappa_;  // 4 m v0 / (hbar^2 delta)

    mutable std::once_flag tail_once_;
    mutable tail_params tail_;
};

// One-shot evaluation; prefer holding a `wavefunction` on hot paths.
double eval_psi(const physical_system& sys, const spectral_point& sp,
                const solution_coefficients& c, double x);

// Quasi-polynomial family a = n (integer), c2 = 0.
// E_n = (v0/2) (-m v0 / hbar^2)^{1/3} n^{-2/3}, v0 < 0.
double quasipoly_energy(const physical_system& sys, int n);

// Unnormalized quasi-polynomial wavefunction
// psi_n = exp(-sqrt(2n) y - delta x / 2) (H_n(y) - sqrt(2n) H_{n-1}(y)),
// y = sqrt(2n) - sqrt(delta x).
double quasipoly_psi(const physical_system& sys, int n, double x);

namespace detail {

struct psi_mp {
    mp_real psi;
    mp_real dpsi_dx;
};

// Full extended-precision evaluation of psi and dpsi/dx (no tail switching);
// used where combinations of solutions cancel, e.g. Wronskian scans.
psi_mp eval_psi_mp(const physical_system& sys, const spectral_point& sp,
                   const solution_coefficients& c, double x);

} // namespace detail

} // namespace rootwell

#endif
