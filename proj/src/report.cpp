#include "rootwell/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "rootwell/heun.hpp"
#include "rootwell/oracle.hpp"
#include "rootwell/spectrum.hpp"

namespace rootwell {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

check_result make_check(std::string name, double measured, double threshold) {
    check_result c;
    c.name = std::move(name);
    c.measured = measured;
    c.threshold = threshold;
    c.pass = measured <= threshold;
    return c;
}

// Residual over the panels [0.05, 2] and [2, x_hi]; the left panel needs the
// finer spacing because the potential's derivatives blow up toward 0.
double panel_residual(const std::function<double(double)>& psi, const physical_system& sys,
                      double energy, double x_hi) {
    auto left = uniform_grid(0.05, 2.0, 3001);
    auto right = uniform_grid(2.0, x_hi, 3501);
    const double r1 = residual_check(psi, sys, energy, left).max_rel_residual;
    const double r2 = residual_check(psi, sys, energy, right).max_rel_residual;
    return std::max(r1, r2);
}

} // namespace

std::vector<check_result> verify_residual_suite(const physical_system& sys) {
    std::vector<check_result> out;
    for (int n = 1; n <= 6; ++n) {
        const double e = quasipoly_energy(sys, n);
        auto psi = [&](double x) { return quasipoly_psi(sys, n, x); };
        out.push_back(make_check("residual.quasipoly.n" + std::to_string(n),
                                 panel_residual(psi, sys, e, 30.0), 1e-6));
    }
    for (int n = 1; n <= 3; ++n) {
        bound_state bs = solve_bound_state(sys, n);
        wavefunction w = bound_wavefunction(sys, bs);
        const double x_hi = std::min(20.0, 0.9 * w.x_switch());
        auto psi = [&](double x) { return w.value(x); };
        out.push_back(make_check("residual.bound.n" + std::to_string(n),
                                 panel_residual(psi, sys, bs.energy, x_hi), 1e-6));
    }
    return out;
}

std::vector<check_result> verify_numerov_suite(const physical_system& sys) {
    std::vector<check_result> out;
    for (int n = 1; n <= 3; ++n) {
        const double e_exact = energy_from_a(sys, solve_exact_root(n));
        shooting_config cfg = default_shooting_config(sys, approx_spectrum(sys, n), 20000);
        cfg.x_max = std::max(cfg.x_max, 60.0);
        const double e_shoot = numerov_eigenvalue(sys, cfg);
        out.push_back(make_check("numerov.match.n" + std::to_string(n),
                                 std::abs(e_shoot - e_exact) / std::abs(e_exact), 1e-5));
    }
    return out;
}

std::vector<check_result> verify_heun_suite(const physical_system& sys) {
    std::vector<check_result> out;
    const double e = -0.5;
    for (int branch : {-1, 1}) {
        const std::string tag = branch < 0 ? "minus" : "plus";
        auto xs = uniform_grid(0.1, 10.0, 400);
        out.push_back(make_check("heun.route_fit." + tag,
                                 route_equivalence_residual(sys, e, branch, xs), 1e-6));
        tri_confluent_params p = heun_params_from_physics(sys, e, branch);
        out.push_back(make_check("heun.a3_residual." + tag,
                                 a3_residual_max(p, 0.05, std::sqrt(20.0), 2000), 1e-6));
    }
    // reconstructed psi must satisfy the original equation
    tri_confluent_params p = heun_params_from_physics(sys, e, -1);
    std::vector<double> z_nodes;
    for (int i = 0; i <= 2048; ++i) z_nodes.push_back(std::sqrt(20.001) * i / 2048);
    heun_trajectory t = integrate_tch(p, z_nodes, 1.0, 0.0);
    auto psi = [&](double x) {
        const double grid[1] = {x};
        return reconstruct_psi(p, t, grid).values[0];
    };
    out.push_back(make_check("heun.ode_residual", panel_residual(psi, sys, e, 10.0), 1e-6));
    return out;
}

std::vector<check_result> verify_wronskian_suite(const physical_system& sys) {
    std::vector<check_result> out;
    for (double e : {-0.5, -0.21}) {
        auto xs = uniform_grid(0.05, 20.0, 160);
        grid_function w = wronskian_scan(sys, e, xs);
        const double w_ref = w.values[w.values.size() / 2];
        double worst = 0.0;
        for (double v : w.values) worst = std::max(worst, std::abs(v - w_ref));
        char name[64];
        std::snprintf(name, sizeof name, "wronskian.constancy.E%g", e);
        out.push_back(make_check(name, worst / std::abs(w_ref), 1e-8));
    }
    return out;
}

void print_checks(std::ostream& os, const std::vector<check_result>& checks) {
    for (const auto& c : checks) {
        char line[160];
        std::snprintf(line, sizeof line, "%-32s measured %.3e  threshold %.1e  %s", c.name.c_str(),
                      c.measured, c.threshold, c.pass ? "PASS" : "FAIL");
        os << line << '\n';
    }
}

bool all_pass(const std::vector<check_result>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void write_table(const std::string& path, file_format fmt,
                 const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows) {
    std::ofstream f(path);
    if (!f) throw domain_error("cannot open output file: " + path);
    if (fmt == file_format::csv) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            f << (i ? "," : "") << columns[i];
        f << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                f << (i ? "," : "");
                if (!std::isnan(row[i])) f << fmt17(row[i]);
            }
            f << '\n';
        }
    } else {
        nlohmann::json j;
        j["columns"] = columns;
        auto& out = j["rows"] = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r = nlohmann::json::array();
            for (double v : row) {
                if (std::isnan(v)) r.push_back(nullptr);
                else r.push_back(v);
            }
            out.push_back(std::move(r));
        }
        f << j.dump(2) << '\n';
    }
}

void write_grid(const std::string& path, file_format fmt, const grid_function& g,
                const std::string& x_name, const std::string& v_name) {
    std::vector<std::vector<double>> rows(g.xs.size());
    for (std::size_t i = 0; i < g.xs.size(); ++i) rows[i] = {g.xs[i], g.values[i]};
    write_table(path, fmt, {x_name, v_name}, rows);
}

void write_spectrum_rows(const std::string& path, file_format fmt,
                         const std::vector<spectrum_row>& rows) {
    std::vector<std::vector<double>> data(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        data[i] = {double(rows[i].n), rows[i].a_n, rows[i].energy, rows[i].rel_err_vs_exact};
    write_table(path, fmt, {"n", "a_n", "E_n", "rel_err_vs_exact"}, data);
}

void write_check_report(const std::string& path, const std::vector<check_result>& checks) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : checks) {
        j.push_back({{"name", c.name},
                     {"measured", c.measured},
                     {"threshold", c.threshold},
                     {"pass", c.pass}});
    }
    std::ofstream f(path);
    if (!f) throw domain_error("cannot open output file: " + path);
    f << j.dump(2) << '\n';
}

} // namespace rootwell
