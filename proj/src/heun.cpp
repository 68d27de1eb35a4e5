#include "rootwell/heun.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace rootwell {

namespace {

struct state {
    double u;
    double up;
};

// u'' = -(gamma + delta z + epsilon z^2) u' - (alpha z - q) u
state rhs(const tri_confluent_params& p, double z, const state& y) {
    const double c1 = p.gamma_h + z * (p.delta_h + z * p.epsilon_h);
    const double c0 = p.alpha_h * z - p.q_h;
    return {y.up, -c1 * y.up - c0 * y.u};
}

state rk4_step(const tri_confluent_params& p, double z, const state& y, double h) {
    const state k1 = rhs(p, z, y);
    const state k2 = rhs(p, z + 0.5 * h, {y.u + 0.5 * h * k1.u, y.up + 0.5 * h * k1.up});
    const state k3 = rhs(p, z + 0.5 * h, {y.u + 0.5 * h * k2.u, y.up + 0.5 * h * k2.up});
    const state k4 = rhs(p, z + h, {y.u + h * k3.u, y.up + h * k3.up});
    return {y.u + h / 6.0 * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
            y.up + h / 6.0 * (k1.up + 2.0 * k2.up + 2.0 * k3.up + k4.up)};
}

// Advance from z to z_target with step-halving error control.
state advance(const tri_confluent_params& p, double z, double z_target, state y, double& h) {
    constexpr double tol = 1e-12;
    while (z < z_target) {
        double step = std::min(h, z_target - z);
        for (;;) {
            const state full = rk4_step(p, z, y, step);
            const state h1 = rk4_step(p, z, y, 0.5 * step);
            const state h2 = rk4_step(p, z + 0.5 * step, h1, 0.5 * step);
            const double scale = 1.0 + std::max(std::abs(h2.u), std::abs(h2.up));
            const double err =
                std::max(std::abs(full.u - h2.u), std::abs(full.up - h2.up)) / 15.0;
            if (err <= tol * scale) {
                // fifth-order local extrapolation
                y = {h2.u + (h2.u - full.u) / 15.0, h2.up + (h2.up - full.up) / 15.0};
                z += step;
                if (err < 0.02 * tol * scale) h = std::min(step * 2.0, h * 2.0);
                break;
            }
            step *= 0.5;
            h = step;
            if (step < 1e-10)
                throw tolerance_error("tri-confluent integrator step control failed");
        }
    }
    return y;
}

double w_exponent(const tri_confluent_params& p, double z) {
    return p.gamma_h * z + p.delta_h * z * z / 2.0 + p.epsilon_h * z * z * z / 3.0;
}

// 2x2 least squares: minimize || t - (A b1 + B b2) ||_2.
std::array<double, 2> fit_two(std::span<const double> b1, std::span<const double> b2,
                              std::span<const double> t) {
    double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        s11 += b1[i] * b1[i];
        s12 += b1[i] * b2[i];
        s22 += b2[i] * b2[i];
        r1 += b1[i] * t[i];
        r2 += b2[i] * t[i];
    }
    const double det = s11 * s22 - s12 * s12;
    if (det == 0.0) throw precision_error("fit basis is degenerate");
    return {(r1 * s22 - r2 * s12) / det, (r2 * s11 - r1 * s12) / det};
}

} // namespace

tri_confluent_params heun_params_from_physics(const physical_system& sys, double energy,
                                              int branch) {
    validate(sys);
    if (!(std::isfinite(energy) && energy < 0.0))
        throw domain_error("tri-confluent reduction requires E < 0");
    if (branch != -1 && branch != 1) throw domain_error("branch must be -1 or +1");
    tri_confluent_params p;
    p.gamma_h = 0.0;
    p.epsilon_h = 0.0;
    p.q_h = 0.0;
    p.delta_h = branch * 2.0 * std::sqrt(2.0 * sys.mass * (-energy)) / sys.hbar;
    p.alpha_h = -2.0 * std::sqrt(2.0 * sys.mass) * sys.v0 / (sys.hbar * sys.hbar);
    return p;
}

heun_trajectory integrate_tch(const tri_confluent_params& p, std::span<const double> z_grid,
                              double u0, double du0) {
    if (z_grid.size() < 2) throw domain_error("z grid needs at least 2 nodes");
    if (std::abs(z_grid.front()) > 1e-12) throw domain_error("z grid must start at 0");
    heun_trajectory traj;
    traj.zs.assign(z_grid.begin(), z_grid.end());
    traj.u.resize(z_grid.size());
    traj.u_prime.resize(z_grid.size());
    state y{u0, du0};
    traj.u[0] = y.u;
    traj.u_prime[0] = y.up;
    double h = (z_grid.back() - z_grid.front()) / 1024.0;
    for (std::size_t i = 1; i < z_grid.size(); ++i) {
        if (!(z_grid[i] > z_grid[i - 1]))
            throw domain_error("z grid must be strictly increasing");
        y = advance(p, z_grid[i - 1], z_grid[i], y, h);
        traj.u[i] = y.u;
        traj.u_prime[i] = y.up;
    }
    return traj;
}

std::vector<double> trajectory_w(const tri_confluent_params& p, const heun_trajectory& traj) {
    std::vector<double> w(traj.zs.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = std::exp(w_exponent(p, traj.zs[i])) * traj.u_prime[i];
    return w;
}

grid_function reconstruct_psi(const tri_confluent_params& p, const heun_trajectory& traj,
                              std::span<const double> x_grid) {
    grid_function g;
    g.meta.emplace_back("quantity", "psi_heun_route");
    g.xs.assign(x_grid.begin(), x_grid.end());
    g.values.resize(x_grid.size());
    const double z_min = traj.zs.front(), z_max = traj.zs.back();
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        if (!(x >= 0.0)) throw domain_error("x grid must be non-negative");
        const double z = std::sqrt(2.0 * x);
        if (z < z_min - 1e-12 || z > z_max + 1e-12)
            throw range_error("x grid exceeds trajectory coverage");
        auto it = std::upper_bound(traj.zs.begin(), traj.zs.end(), z);
        std::size_t hi = std::min<std::size_t>(std::distance(traj.zs.begin(), it),
                                               traj.zs.size() - 1);
        if (hi == 0) hi = 1;
        const std::size_t lo = hi - 1;
        const double za = traj.zs[lo], zb = traj.zs[hi];
        const double dz = zb - za;
        const double t = std::clamp((z - za) / dz, 0.0, 1.0);
        // cubic Hermite on u', with u'' supplied by the equation itself
        auto upp = [&](std::size_t k) {
            const double zz = traj.zs[k];
            return -(p.gamma_h + zz * (p.delta_h + zz * p.epsilon_h)) * traj.u_prime[k] -
                   (p.alpha_h * zz - p.q_h) * traj.u[k];
        };
        const double pa = traj.u_prime[lo], pb = traj.u_prime[hi];
        const double ma = upp(lo) * dz, mb = upp(hi) * dz;
        const double t2 = t * t, t3 = t2 * t;
        const double val = (2 * t3 - 3 * t2 + 1) * pa + (t3 - 2 * t2 + t) * ma +
                           (-2 * t3 + 3 * t2) * pb + (t3 - t2) * mb;
        g.values[i] = std::exp(0.5 * w_exponent(p, z)) * val;
    }
    return g;
}

double a3_residual_max(const tri_confluent_params& p, double z_min, double z_max, int points) {
    if (p.alpha_h == 0.0) throw domain_error("derived equation needs alpha != 0");
    const double z0 = p.q_h / p.alpha_h;
    if (!(z_min > z0 + 0.04)) throw domain_error("z_min must exclude the apparent singularity");

    // sample w on a uniform grid and difference it
    std::vector<double> zs(points);
    const double h = (z_max - z_min) / (points - 1);
    for (int i = 0; i < points; ++i) zs[i] = z_min + h * i;
    std::vector<double> z_ext;
    z_ext.push_back(0.0);
    for (double z : zs) z_ext.push_back(z);
    heun_trajectory traj = integrate_tch(p, z_ext, 1.0, 1.0);
    std::vector<double> w = trajectory_w(p, traj);
    w.erase(w.begin());  // drop the z = 0 anchor

    double worst = 0.0;
    for (int i = 2; i + 2 < points; ++i) {
        const double z = zs[i];
        const double wpp = (-w[i - 2] + 16 * w[i - 1] - 30 * w[i] + 16 * w[i + 1] - w[i + 2]) /
                           (12.0 * h * h);
        const double wp = (w[i - 2] - 8 * w[i - 1] + 8 * w[i + 1] - w[i + 2]) / (12.0 * h);
        const double coef = p.gamma_h + z * (p.delta_h + z * p.epsilon_h) + 1.0 / (z - z0);
        const double t1 = wpp;
        const double t2 = coef * wp;
        const double t3 = p.alpha_h * (z - z0) * w[i];
        const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), 1e-300});
        worst = std::max(worst, std::abs(t1 - t2 + t3) / scale);
    }
    return worst;
}

double heun_fit_residual(const physical_system& sys, double energy, int branch,
                         std::span<const double> x_grid, std::span<const double> target) {
    tri_confluent_params p = heun_params_from_physics(sys, energy, branch);
    const double z_max = std::sqrt(2.0 * x_grid.back()) + 1e-9;
    std::vector<double> z_nodes;
    const int nodes = 2048;
    for (int i = 0; i <= nodes; ++i) z_nodes.push_back(z_max * i / nodes);
    heun_trajectory t1 = integrate_tch(p, z_nodes, 1.0, 0.0);
    heun_trajectory t2 = integrate_tch(p, z_nodes, 0.0, 1.0);
    grid_function b1 = reconstruct_psi(p, t1, x_grid);
    grid_function b2 = reconstruct_psi(p, t2, x_grid);

    auto coef = fit_two(b1.values, b2.values, target);
    double worst = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i)
        scale = std::max(scale, std::abs(target[i]));
    for (std::size_t i = 0; i < target.size(); ++i) {
        const double fit = coef[0] * b1.values[i] + coef[1] * b2.values[i];
        worst = std::max(worst, std::abs(fit - target[i]));
    }
    return worst / scale;
}

double route_equivalence_residual(const physical_system& sys, double energy, int branch,
                                  std::span<const double> x_grid) {
    // Closed-form basis sampled on the grid, then fitted by the Heun route.
    const spectral_point sp = spectral_point_for(sys, energy);
    wavefunction w1(sys, sp, solution_coefficients{1.0, 0.0});
    wavefunction w2(sys, sp, solution_coefficients{0.0, 1.0});
    std::vector<double> t1(x_grid.size()), t2(x_grid.size());
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        t1[i] = w1.value(x_grid[i]);
        t2[i] = w2.value(x_grid[i]);
    }
    return std::max(heun_fit_residual(sys, energy, branch, x_grid, t1),
                    heun_fit_residual(sys, energy, branch, x_grid, t2));
}

} // namespace rootwell
