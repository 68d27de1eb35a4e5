// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Tolerances are pinned in code; measured values are printed next to them.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "rootwell/heun.hpp"
#include "rootwell/oracle.hpp"
#include "rootwell/quadrature.hpp"
#include "rootwell/specfun.hpp"
#include "rootwell/spectrum.hpp"

using namespace rootwell;

namespace {

const physical_system unit_sys{1.0, 1.0, -1.0};
int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d [%s] %-34s %s\n", id, pass ? "PASS" : "FAIL", name, detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double panel_residual(const std::function<double(double)>& psi, double energy, double x_hi) {
    auto left = uniform_grid(0.05, 2.0, 3001);
    auto right = uniform_grid(2.0, x_hi, 3501);
    return std::max(residual_check(psi, unit_sys, energy, left).max_rel_residual,
                    residual_check(psi, unit_sys, energy, right).max_rel_residual);
}

void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    const double a1 = solve_exact_root(1);
    const double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = a1 >= 0.85 && a1 <= 0.87 && sec < 1.0;
    report(1, "ground root in [0.85, 0.87]", pass, fmt("a1 = %.6f in %.3fs", a1, sec));
}

void criterion_2() {
    // relative error of the elementary spectrum formula vs the exact roots:
    // < 1e-3 for every n in 3..20 and < 1e-5 for every n in 7..20
    double worst_low = 0.0, worst_high = 0.0;
    int worst_low_n = 0, worst_high_n = 0;
    for (int n = 3; n <= 20; ++n) {
        const double exact = energy_from_a(unit_sys, solve_exact_root(n));
        const double approx = approx_spectrum(unit_sys, n);
        const double rel = std::abs(approx - exact) / std::abs(exact);
        if (rel > worst_low) {
            worst_low = rel;
            worst_low_n = n;
        }
        if (n >= 7 && rel > worst_high) {
            worst_high = rel;
            worst_high_n = n;
        }
        std::printf("    n=%2d rel_err=%.4e\n", n, rel);
    }
    const bool pass_low = worst_low < 1e-3;
    const bool pass_high = worst_high < 1e-5;
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "max(3..20) = %.3e at n=%d (tol 1e-3); max(7..20) = %.3e at n=%d (tol 1e-5)",
                  worst_low, worst_low_n, worst_high, worst_high_n);
    report(2, "spectrum approximation audit", pass_low && pass_high, detail);
}

void criterion_3() {
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const double e = quasipoly_energy(unit_sys, n);
        auto psi = [&](double x) { return quasipoly_psi(unit_sys, n, x); };
        worst = std::max(worst, panel_residual(psi, e, 30.0));
    }
    report(3, "quasi-polynomial exactness", worst <= 1e-6,
           fmt("max residual %.3e (tol 1e-6) on [0.05, 30]", worst));
}

void criterion_4() {
    auto explicit_poly = [](int n, double y, double dx_half) {
        if (n == 1) return std::exp(-std::sqrt(2.0) * y - dx_half) * (1.0 - std::sqrt(2.0) * y);
        if (n == 2)
            return std::exp(-2.0 * y - dx_half) * (1.0 + 2.0 * y - 2.0 * y * y);
        return std::exp(-std::sqrt(6.0) * y - dx_half) *
               (3.0 - 3.0 * std::sqrt(6.0) * y - 6.0 * y * y + 2.0 * std::sqrt(6.0) * y * y * y);
    };
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const auto sp = spectral_point_for(unit_sys, quasipoly_energy(unit_sys, n));
        double num = 0.0, den = 0.0;
        std::vector<double> lib, expl;
        for (double x = 0.0; x <= 30.0; x += 0.05) {
            const double y = std::sqrt(2.0 * n) - std::sqrt(sp.delta * x);
            lib.push_back(quasipoly_psi(unit_sys, n, x));
            expl.push_back(explicit_poly(n, y, 0.5 * sp.delta * x));
            num += lib.back() * expl.back();
            den += expl.back() * expl.back();
        }
        const double k = num / den;
        double scale = 0.0, diff = 0.0;
        for (std::size_t i = 0; i < lib.size(); ++i) {
            scale = std::max(scale, std::abs(lib[i]));
            diff = std::max(diff, std::abs(lib[i] - k * expl[i]));
        }
        worst = std::max(worst, diff / scale);
    }
    report(4, "explicit quasi-polynomial concordance", worst < 1e-9,
           fmt("max pointwise residual %.3e (tol 1e-9)", worst));
}

void criterion_5() {
    double worst = 0.0;
    for (int n = 1; n <= 3; ++n) {
        const double exact = energy_from_a(unit_sys, solve_exact_root(n));
        shooting_config cfg = default_shooting_config(unit_sys, approx_spectrum(unit_sys, n), 20000);
        cfg.x_max = std::max(cfg.x_max, 60.0);
        const double shot = numerov_eigenvalue(unit_sys, cfg);
        worst = std::max(worst, std::abs(shot - exact) / std::abs(exact));
    }
    auto eig = [&](int steps) {
        shooting_config cfg = default_shooting_config(unit_sys, -0.55, steps);
        cfg.x_max = 60.0;
        cfg.tol_e = 1e-14;
        return numerov_eigenvalue(unit_sys, cfg);
    };
    const double e1 = eig(4000), e2 = eig(8000), e3 = eig(16000);
    const double ratio = (e1 - e2) / (e2 - e3);
    const bool pass = worst <= 1e-5 && ratio > 10.0 && ratio < 24.0;
    report(5, "independent shooting agreement", pass,
           fmt("max rel gap %.3e (tol 1e-5); refinement ratio %.1f (expect ~16)", worst, ratio));
}

void criterion_6() {
    bool pass = true;
    std::string detail;
    for (int n = 1; n <= 3; ++n) {
        bound_state bs = solve_bound_state(unit_sys, n);
        wavefunction w = bound_wavefunction(unit_sys, bs);
        double peak = 0.0;
        for (double x = 0.02; x < 16.0; x += 0.02) peak = std::max(peak, std::abs(w.value(x)));
        const bool origin_ok = std::abs(w.value(0.0)) <= 1e-9 * peak;

        const double x_turn = (unit_sys.v0 / bs.energy) * (unit_sys.v0 / bs.energy);
        bool tail_ok = true;
        double prev = std::abs(w.value(x_turn + 0.5));
        const int sign0 = w.value(x_turn + 0.5) < 0 ? -1 : 1;
        for (int k = 1; k <= 50; ++k) {
            const double x = x_turn + 0.5 + k * (8.0 / w.point().delta) / 50.0;
            const double v = w.value(x);
            if ((v < 0 ? -1 : 1) != sign0 || std::abs(v) >= prev) tail_ok = false;
            prev = std::abs(v);
        }
        const int nodes = count_nodes(unit_sys, bs);
        if (!origin_ok || !tail_ok || nodes != n - 1) {
            pass = false;
            detail += " n=" + std::to_string(n) + (origin_ok ? "" : " origin") +
                      (tail_ok ? "" : " tail") + (nodes != n - 1 ? " nodes" : "");
        }
    }
    report(6, "boundary conditions and node counts", pass,
           pass ? "psi(0), monotone tail, n-1 nodes for n = 1..3" : detail);
}

void criterion_7() {
    auto xs = uniform_grid(0.05, 20.0, 160);
    grid_function w = wronskian_scan(unit_sys, -0.5, xs);
    const double ref = w.values[w.values.size() / 2];
    double w_dev = 0.0;
    for (double v : w.values) w_dev = std::max(w_dev, std::abs(v - ref) / std::abs(ref));

    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> dnu(0.2, 12.0), dz(-6.0, 6.0);
    double rec_dev = 0.0;
    for (int i = 0; i < 60; ++i) {
        const double nu = dnu(rng), z = dz(rng);
        const double lhs = specfun::hermite_h(nu + 1.0, z).value;
        const double resid = lhs - 2.0 * z * specfun::hermite_h(nu, z).value +
                             2.0 * nu * specfun::hermite_h(nu - 1.0, z).value;
        rec_dev = std::max(rec_dev, std::abs(resid) / std::max(1.0, std::abs(lhs)));
    }

    std::uniform_real_distribution<double> dnu2(0.3, 8.0), dz2(-4.0, 4.0);
    double der_dev = 0.0;
    const double h = 1e-5;
    for (int i = 0; i < 40; ++i) {
        const double nu = dnu2(rng), z = dz2(rng);
        const double an = specfun::hermite_h_deriv(nu, z).value;
        if (std::abs(an) < 1e-3) continue;
        const double fd = (specfun::hermite_h(nu, z - 2 * h).value -
                           8 * specfun::hermite_h(nu, z - h).value +
                           8 * specfun::hermite_h(nu, z + h).value -
                           specfun::hermite_h(nu, z + 2 * h).value) /
                          (12 * h);
        der_dev = std::max(der_dev, std::abs(fd - an) / std::abs(an));
    }

    double col_dev = 0.0;
    std::uniform_real_distribution<double> dz3(-6.0, 6.0);
    for (int n = 0; n <= 10; ++n) {
        for (int rep = 0; rep < 6; ++rep) {
            const double z = dz3(rng);
            double hm = 1.0, hcur = 2.0 * z;
            if (n == 0) hcur = 1.0;
            for (int k = 1; k < n; ++k) {
                const double next = 2.0 * z * hcur - 2.0 * k * hm;
                hm = hcur;
                hcur = next;
            }
            const double lib = specfun::hermite_h(double(n), z).value;
            col_dev = std::max(col_dev, std::abs(lib - hcur) / std::max(1.0, std::abs(hcur)));
        }
    }

    const bool pass = w_dev <= 1e-8 && rec_dev <= 1e-10 && der_dev <= 1e-6 && col_dev <= 1e-12;
    char detail[200];
    std::snprintf(detail, sizeof detail,
                  "wronskian %.2e (1e-8); recurrence %.2e (1e-10); derivative %.2e (1e-6); "
                  "collapse %.2e (1e-12)",
                  w_dev, rec_dev, der_dev, col_dev);
    report(7, "structural invariants", pass, detail);
}

void criterion_8() {
    const double energy = -0.5;
    tri_confluent_params p = heun_params_from_physics(unit_sys, energy, -1);
    std::vector<double> zs(2049);
    for (int i = 0; i <= 2048; ++i) zs[i] = std::sqrt(2.0 * 10.5) * i / 2048;
    heun_trajectory t = integrate_tch(p, zs, 1.0, 0.0);
    auto psi = [&](double x) {
        const double grid[1] = {x};
        return reconstruct_psi(p, t, grid).values[0];
    };
    const double ode_res = panel_residual(psi, energy, 10.0);

    auto xs = uniform_grid(0.1, 10.0, 320);
    const double fit = route_equivalence_residual(unit_sys, energy, -1, xs);
    const double a3 = a3_residual_max(p, 0.05, std::sqrt(20.0), 2000);
    const bool pass = ode_res <= 1e-6 && fit < 1e-6 && a3 <= 1e-6;
    char detail[160];
    std::snprintf(detail, sizeof detail, "ode %.2e; fit %.2e; derived-eq %.2e (all tol 1e-6)",
                  ode_res, fit, a3);
    report(8, "tri-confluent route verification", pass, detail);
}

void criterion_9() {
    std::vector<bound_state> states;
    for (int n = 1; n <= 4; ++n) states.push_back(solve_bound_state(unit_sys, n));
    double norm_dev = 0.0, cross = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            const double ov = overlap(unit_sys, states[i], states[j]);
            if (i == j) norm_dev = std::max(norm_dev, std::abs(ov - 1.0));
            else cross = std::max(cross, std::abs(ov));
        }
    }
    const bool pass = norm_dev <= 1e-6 && cross <= 1e-6;
    report(9, "normalization and orthogonality", pass,
           fmt("max |norm-1| %.2e; max |overlap| %.2e (tol 1e-6)", norm_dev, cross));
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
