#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootwell/batch.hpp"
#include "rootwell/heun.hpp"
#include "rootwell/oracle.hpp"
#include "rootwell/report.hpp"
#include "rootwell/spectrum.hpp"

namespace {

struct run_config {
    double mass = 1.0;
    double hbar = 1.0;
    double v0 = -1.0;
    int n = 1;
    std::vector<int> n_range = {1, 10};
    double x_max = 40.0;
    int points = 2000;
    std::string format = "csv";
    std::string out;
    bool normalize = false;
    std::string mode;
};

rootwell::physical_system system_of(const run_config& cfg) {
    return {cfg.mass, cfg.hbar, cfg.v0};
}

rootwell::file_format format_of(const run_config& cfg) {
    return cfg.format == "json" ? rootwell::file_format::json : rootwell::file_format::csv;
}

std::string default_ext(const run_config& cfg) { return cfg.format == "json" ? ".json" : ".csv"; }

void add_common(CLI::App* cmd, run_config& cfg) {
    cmd->add_option("--v0", cfg.v0, "potential strength (default -1)");
    cmd->add_option("--mass", cfg.mass, "particle mass (default 1)");
    cmd->add_option("--hbar", cfg.hbar, "reduced Planck constant (default 1)");
    cmd->add_option("--x-max", cfg.x_max, "grid end (default 40)");
    cmd->add_option("--points", cfg.points, "grid point count (default 2000)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", cfg.out, "output file path");
}

int run_spectrum(const run_config& cfg) {
    rootwell::spectrum_mode mode = rootwell::spectrum_mode::exact;
    if (cfg.mode == "approx") mode = rootwell::spectrum_mode::approx;
    else if (cfg.mode == "quasipoly") mode = rootwell::spectrum_mode::quasipoly;

    auto rows = rootwell::spectrum_table(system_of(cfg), cfg.n_range[0], cfg.n_range[1], mode,
                                         rootwell::exec_mode::parallel);
    for (const auto& r : rows) {
        std::printf("n=%2d  a_n=%.12g  E_n=%.12g", r.n, r.a_n, r.energy);
        if (!std::isnan(r.rel_err_vs_exact))
            std::printf("  rel_err_vs_exact=%.3e", r.rel_err_vs_exact);
        std::printf("\n");
    }
    const std::string path = cfg.out.empty() ? "spectrum" + default_ext(cfg) : cfg.out;
    rootwell::write_spectrum_rows(path, format_of(cfg), rows);
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_wavefunction(const run_config& cfg) {
    const auto sys = system_of(cfg);
    auto xs = rootwell::uniform_grid(0.0, cfg.x_max, cfg.points);
    rootwell::grid_function g;
    if (cfg.mode == "quasipoly") {
        g = rootwell::sample_quasipoly(sys, cfg.n, xs, rootwell::exec_mode::parallel);
        if (cfg.normalize) {
            double norm2 = 0.0;
            for (std::size_t i = 1; i < g.xs.size(); ++i)
                norm2 += 0.5 * (g.values[i] * g.values[i] + g.values[i - 1] * g.values[i - 1]) *
                         (g.xs[i] - g.xs[i - 1]);
            for (auto& v : g.values) v /= std::sqrt(norm2);
        }
    } else {
        rootwell::bound_state bs = rootwell::solve_bound_state(sys, cfg.n);
        rootwell::wavefunction w = rootwell::bound_wavefunction(sys, bs);
        g = rootwell::sample_wavefunction(w, xs, rootwell::exec_mode::parallel);
    }
    const std::string path = cfg.out.empty() ? "wavefunction" + default_ext(cfg) : cfg.out;
    rootwell::write_grid(path, format_of(cfg), g);
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_verify(const run_config& cfg, const std::string& suite) {
    const auto sys = system_of(cfg);
    std::vector<rootwell::check_result> checks;
    auto append = [&](std::vector<rootwell::check_result> v) {
        checks.insert(checks.end(), v.begin(), v.end());
    };
    if (suite == "residual" || suite == "all") append(rootwell::verify_residual_suite(sys));
    if (suite == "numerov" || suite == "all") append(rootwell::verify_numerov_suite(sys));
    if (suite == "heun" || suite == "all") append(rootwell::verify_heun_suite(sys));
    if (suite == "wronskian" || suite == "all") append(rootwell::verify_wronskian_suite(sys));
    rootwell::print_checks(std::cout, checks);
    if (!cfg.out.empty()) rootwell::write_check_report(cfg.out, checks);
    return rootwell::all_pass(checks) ? 0 : 2;
}

int run_figures(const run_config& cfg, int fig) {
    const auto sys = system_of(cfg);
    const auto fmt = format_of(cfg);
    const std::string base = cfg.out.empty() ? "fig" + std::to_string(fig) : cfg.out;
    auto with_suffix = [&](const std::string& suffix) {
        const auto dot = base.rfind('.');
        if (dot == std::string::npos) return base + suffix + default_ext(cfg);
        return base.substr(0, dot) + suffix + base.substr(dot);
    };

    if (fig == 1 || fig == 4) {
        // three wavefunction series on one grid
        auto xs = rootwell::uniform_grid(0.0, cfg.x_max, cfg.points);
        std::vector<std::vector<double>> rows(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) rows[i] = {xs[i], 0, 0, 0};
        for (int n = 1; n <= 3; ++n) {
            rootwell::grid_function g;
            if (fig == 1) {
                g = rootwell::sample_quasipoly(sys, n, xs, rootwell::exec_mode::parallel);
            } else {
                rootwell::bound_state bs = rootwell::solve_bound_state(sys, n);
                rootwell::wavefunction w = rootwell::bound_wavefunction(sys, bs);
                g = rootwell::sample_wavefunction(w, xs, rootwell::exec_mode::parallel);
            }
            for (std::size_t i = 0; i < xs.size(); ++i) rows[i][n] = g.values[i];
        }
        const std::string path = cfg.out.empty() ? base + default_ext(cfg) : cfg.out;
        rootwell::write_table(path, fmt, {"x", "psi1", "psi2", "psi3"}, rows);
        std::printf("wrote %s\n", path.c_str());
        return 0;
    }
    if (fig == 3) {
        // potential curve, level lines with turning points, relative-error table
        auto xs = rootwell::uniform_grid(0.05, cfg.x_max, cfg.points);
        std::vector<std::vector<double>> pot(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i)
            pot[i] = {xs[i], sys.v0 / std::sqrt(xs[i])};
        rootwell::write_table(with_suffix("_potential"), fmt, {"x", "V"}, pot);

        auto rows = rootwell::spectrum_table(sys, 1, 20, rootwell::spectrum_mode::approx,
                                             rootwell::exec_mode::parallel);
        std::vector<std::vector<double>> levels(rows.size()), relerr;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const double x_turn = (sys.v0 / rows[i].energy) * (sys.v0 / rows[i].energy);
            levels[i] = {double(rows[i].n), rows[i].energy, x_turn};
            if (rows[i].n >= 3)
                relerr.push_back({double(rows[i].n), rows[i].rel_err_vs_exact});
        }
        rootwell::write_table(with_suffix("_levels"), fmt, {"n", "E_n", "x_turn"}, levels);
        rootwell::write_table(with_suffix("_relerr"), fmt, {"n", "rel_err"}, relerr);
        std::printf("wrote %s, %s, %s\n", with_suffix("_potential").c_str(),
                    with_suffix("_levels").c_str(), with_suffix("_relerr").c_str());
        return 0;
    }
    std::fprintf(stderr, "unknown figure %d\n", fig);
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form and numerically verified bound states of the inverse square "
                 "root potential well"};
    app.require_subcommand(1);

    run_config cfg;

    auto* sp = app.add_subcommand("spectrum", "bound-state spectrum table");
    add_common(sp, cfg);
    sp->add_option("--n-range", cfg.n_range, "quantum number range lo hi")->expected(2);
    sp->add_option("--mode", cfg.mode, "exact | approx | quasipoly")
        ->check(CLI::IsMember({"exact", "approx", "quasipoly"}));

    auto* wf = app.add_subcommand("wavefunction", "sample one wavefunction");
    add_common(wf, cfg);
    wf->add_option("--n", cfg.n, "quantum number")->check(CLI::PositiveNumber);
    wf->add_option("--mode", cfg.mode, "bound | quasipoly")
        ->check(CLI::IsMember({"bound", "quasipoly"}));
    wf->add_flag("--normalize", cfg.normalize, "normalize quasipoly output");

    std::string suite = "all";
    auto* ver = app.add_subcommand("verify", "run verification checks");
    add_common(ver, cfg);
    ver->add_option("suite", suite, "residual | numerov | heun | wronskian | all")
        ->check(CLI::IsMember({"residual", "numerov", "heun", "wronskian", "all"}));

    int fig = 1;
    auto* fg = app.add_subcommand("figures", "emit figure-reproduction data files");
    add_common(fg, cfg);
    fg->add_option("--fig", fig, "figure number: 1 | 3 | 4")->check(CLI::IsMember({1, 3, 4}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (sp->parsed()) return run_spectrum(cfg);
        if (wf->parsed()) return run_wavefunction(cfg);
        if (ver->parsed()) return run_verify(cfg, suite);
        if (fg->parsed()) return run_figures(cfg, fig);
    } catch (const rootwell::numerical_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
