#include "rootwell/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace rootwell {

namespace {

double potential(const physical_system& sys, double x) { return sys.v0 / std::sqrt(x); }

// psi'' = f(x) psi
double numerov_f(const physical_system& sys, double energy, double x) {
    return 2.0 * sys.mass / (sys.hbar * sys.hbar) * (potential(sys, x) - energy);
}

void validate_shooting(const physical_system& sys, const shooting_config& cfg) {
    validate(sys);
    if (sys.v0 > 0.0) throw domain_error("shooting oracle requires v0 < 0");
    if (!(cfg.x0 > 0.0 && cfg.x0 < cfg.x_max))
        throw domain_error("shooting needs 0 < x0 < x_max");
    if (cfg.steps < 1000) throw domain_error("shooting needs steps >= 1000");
    if (!(cfg.tol_e > 0.0)) throw domain_error("tol_e must be positive");
}

} // namespace

std::vector<double> uniform_grid(double lo, double hi, int count) {
    if (count < 2 || !(hi > lo)) throw domain_error("grid needs hi > lo and count >= 2");
    std::vector<double> xs(count);
    const double h = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) xs[i] = lo + h * i;
    xs.back() = hi;
    return xs;
}

std::vector<double> log_grid(double lo, double hi, int count) {
    if (count < 2 || !(hi > lo) || !(lo > 0.0))
        throw domain_error("log grid needs hi > lo > 0 and count >= 2");
    std::vector<double> xs(count);
    const double r = std::log(hi / lo) / (count - 1);
    for (int i = 0; i < count; ++i) xs[i] = lo * std::exp(r * i);
    xs.back() = hi;
    return xs;
}

residual_report residual_check(const std::function<double(double)>& psi,
                               const physical_system& sys, double energy,
                               std::span<const double> xs) {
    validate(sys);
    if (xs.size() < 7) throw grid_error("residual stencil needs at least 7 points");
    const double h = xs[1] - xs[0];
    if (!(h > 0.0) || !(xs.front() > 0.0))
        throw grid_error("grid must be increasing with x > 0");
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (std::abs((xs[i] - xs[i - 1]) - h) > 1e-9 * h + 1e-15)
            throw grid_error("residual stencil requires a uniform grid");
    }

    std::vector<double> f(xs.size()), values(xs.size());
    double f_max = 0.0, psi_max = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        f[i] = numerov_f(sys, energy, xs[i]);
        values[i] = psi(xs[i]);
        f_max = std::max(f_max, std::abs(f[i]));
        psi_max = std::max(psi_max, std::abs(values[i]));
    }
    if (h * std::sqrt(f_max) > 0.5)
        throw grid_error("grid too coarse for the 5-point stencil at this potential");

    residual_report rep;
    rep.scale = psi_max * f_max;
    rep.grid.meta.emplace_back("quantity", "relative_ode_residual");
    const double inv12h2 = 1.0 / (12.0 * h * h);
    for (std::size_t i = 2; i + 2 < xs.size(); ++i) {
        const double d2 = (-values[i - 2] + 16.0 * values[i - 1] - 30.0 * values[i] +
                           16.0 * values[i + 1] - values[i + 2]) * inv12h2;
        const double r = std::abs(d2 - f[i] * values[i]) / rep.scale;
        rep.grid.xs.push_back(xs[i]);
        rep.grid.values.push_back(r);
        rep.max_rel_residual = std::max(rep.max_rel_residual, r);
    }
    return rep;
}

double numerov_shoot(const physical_system& sys, double energy, const shooting_config& cfg) {
    validate_shooting(sys, cfg);
    const double h = (cfg.x_max - cfg.x0) / cfg.steps;
    const double series_c = 8.0 * sys.mass * sys.v0 / (15.0 * sys.hbar * sys.hbar);

    // Frobenius start and a dense RK4 bridge over the first 8 grid cells;
    // the x^{-1/2} singularity otherwise spoils the stencil's order there.
    double psi = cfg.x0 + series_c * std::pow(cfg.x0, 2.5);
    double dpsi = 1.0 + 2.5 * series_c * std::pow(cfg.x0, 1.5);
    constexpr int bridge_cells = 8;
    constexpr int substeps = 64;
    std::array<double, bridge_cells + 1> bridge{};
    bridge[0] = psi;
    double x = cfg.x0;
    for (int cell = 0; cell < bridge_cells; ++cell) {
        const double hh = h / substeps;
        for (int s = 0; s < substeps; ++s) {
            auto acc = [&](double xx, double p) { return numerov_f(sys, energy, xx) * p; };
            const double k1p = dpsi, k1d = acc(x, psi);
            const double k2p = dpsi + 0.5 * hh * k1d, k2d = acc(x + 0.5 * hh, psi + 0.5 * hh * k1p);
            const double k3p = dpsi + 0.5 * hh * k2d, k3d = acc(x + 0.5 * hh, psi + 0.5 * hh * k2p);
            const double k4p = dpsi + hh * k3d, k4d = acc(x + hh, psi + hh * k3p);
            psi += hh / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
            dpsi += hh / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
            x += hh;
        }
        bridge[cell + 1] = psi;
    }

    double p_prev = bridge[bridge_cells - 1];
    double p_cur = bridge[bridge_cells];
    double f_prev = numerov_f(sys, energy, cfg.x0 + (bridge_cells - 1) * h);
    double f_cur = numerov_f(sys, energy, cfg.x0 + bridge_cells * h);
    const double w = h * h / 12.0;
    for (int j = bridge_cells; j < cfg.steps; ++j) {
        const double f_next = numerov_f(sys, energy, cfg.x0 + (j + 1) * h);
        const double p_next =
            (2.0 * (1.0 + 5.0 * w * f_cur) * p_cur - (1.0 - w * f_prev) * p_prev) /
            (1.0 - w * f_next);
        p_prev = p_cur;
        p_cur = p_next;
        f_prev = f_cur;
        f_cur = f_next;
        if (std::abs(p_cur) > 1e280) {
            p_cur *= 1e-140;
            p_prev *= 1e-140;
        }
    }
    return p_cur;
}

double numerov_eigenvalue(const physical_system& sys, const shooting_config& cfg) {
    validate_shooting(sys, cfg);
    if (!(cfg.e_lo < cfg.e_hi && cfg.e_hi < 0.0))
        throw domain_error("energy bracket must satisfy e_lo < e_hi < 0");
    double lo = cfg.e_lo, hi = cfg.e_hi;
    double f_lo = numerov_shoot(sys, lo, cfg);
    const double f_hi = numerov_shoot(sys, hi, cfg);
    if ((f_lo < 0.0) == (f_hi < 0.0))
        throw bracket_error("no eigenvalue sign change inside the energy bracket");
    for (int iter = 0; iter < 300; ++iter) {
        if (hi - lo <= cfg.tol_e) return 0.5 * (lo + hi);
        const double mid = 0.5 * (lo + hi);
        const double f_mid = numerov_shoot(sys, mid, cfg);
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    throw convergence_error("eigenvalue bisection stalled");
}

shooting_config default_shooting_config(const physical_system& sys, double e_estimate,
                                        int steps) {
    validate(sys);
    if (!(e_estimate < 0.0)) throw domain_error("energy estimate must be negative");
    shooting_config cfg;
    const double x_turn = (sys.v0 / e_estimate) * (sys.v0 / e_estimate);
    const double delta = std::sqrt(-8.0 * sys.mass * e_estimate) / sys.hbar;
    cfg.x0 = 1e-6;
    cfg.x_max = x_turn + 24.0 / delta;  // >= 12 e-foldings of exp(-delta x / 2)
    cfg.steps = std::max(steps, 1000);
    cfg.e_lo = e_estimate * 1.05;
    cfg.e_hi = e_estimate * 0.95;
    cfg.tol_e = 1e-12 * std::abs(e_estimate);
    return cfg;
}

grid_function wronskian_scan(const physical_system& sys, double energy,
                             std::span<const double> xs) {
    validate(sys);
    if (!(energy < 0.0)) throw domain_error("Wronskian scan requires E < 0");
    if (xs.empty() || !(xs.front() > 0.0))
        throw domain_error("Wronskian grid must start at x > 0 (dy/dx singular at 0)");
    const spectral_point sp = spectral_point_for(sys, energy);
    const solution_coefficients c1{1.0, 0.0}, c2{0.0, 1.0};

    grid_function g;
    g.meta.emplace_back("quantity", "wronskian");
    g.xs.assign(xs.begin(), xs.end());
    g.values.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0 && !(xs[i] > xs[i - 1]))
            throw domain_error("Wronskian grid must be strictly increasing");
        detail::psi_mp p1 = detail::eval_psi_mp(sys, sp, c1, xs[i]);
        detail::psi_mp p2 = detail::eval_psi_mp(sys, sp, c2, xs[i]);
        g.values[i] = (p1.psi * p2.dpsi_dx - p2.psi * p1.dpsi_dx).to_double();
    }
    return g;
}

} // namespace rootwell
