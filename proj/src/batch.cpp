#include "rootwell/batch.hpp"

#include <cmath>
#include <limits>

namespace rootwell {

grid_function sample_wavefunction(const wavefunction& w, std::span<const double> xs,
                                  exec_mode mode) {
    grid_function g;
    g.xs.assign(xs.begin(), xs.end());
    g.values.resize(xs.size());
    const std::int64_t count = std::int64_t(xs.size());
#pragma omp parallel for schedule(static) if (mode == exec_mode::parallel)
    for (std::int64_t i = 0; i < count; ++i) g.values[i] = w.value(xs[i]);
    return g;
}

grid_function sample_quasipoly(const physical_system& sys, int n, std::span<const double> xs,
                               exec_mode mode) {
    grid_function g;
    g.xs.assign(xs.begin(), xs.end());
    g.values.resize(xs.size());
    const std::int64_t count = std::int64_t(xs.size());
#pragma omp parallel for schedule(static) if (mode == exec_mode::parallel)
    for (std::int64_t i = 0; i < count; ++i) g.values[i] = quasipoly_psi(sys, n, xs[i]);
    return g;
}

std::vector<double> solve_exact_roots(int n_lo, int n_hi, exec_mode mode) {
    if (n_lo < 1 || n_hi < n_lo) throw domain_error("need 1 <= n_lo <= n_hi");
    std::vector<double> roots(n_hi - n_lo + 1);
    const std::int64_t count = std::int64_t(roots.size());
#pragma omp parallel for schedule(dynamic) if (mode == exec_mode::parallel)
    for (std::int64_t i = 0; i < count; ++i) roots[i] = solve_exact_root(n_lo + int(i));
    return roots;
}

std::vector<spectrum_row> spectrum_table(const physical_system& sys, int n_lo, int n_hi,
                                         spectrum_mode mode, exec_mode exec) {
    if (n_lo < 1 || n_hi < n_lo) throw domain_error("need 1 <= n_lo <= n_hi");
    std::vector<spectrum_row> rows(n_hi - n_lo + 1);
    const std::int64_t count = std::int64_t(rows.size());
#pragma omp parallel for schedule(dynamic) if (exec == exec_mode::parallel)
    for (std::int64_t i = 0; i < count; ++i) {
        const int n = n_lo + int(i);
        spectrum_row& r = rows[i];
        r.n = n;
        r.rel_err_vs_exact = std::numeric_limits<double>::quiet_NaN();
        switch (mode) {
            case spectrum_mode::exact:
                r.a_n = solve_exact_root(n);
                r.energy = energy_from_a(sys, r.a_n);
                break;
            case spectrum_mode::approx: {
                r.a_n = approx_root(n, false);
                r.energy = energy_from_a(sys, r.a_n);
                const double exact = energy_from_a(sys, solve_exact_root(n));
                r.rel_err_vs_exact = std::abs(r.energy - exact) / std::abs(exact);
                break;
            }
            case spectrum_mode::quasipoly:
                r.a_n = double(n);
                r.energy = quasipoly_energy(sys, n);
                break;
        }
    }
    return rows;
}

} // namespace rootwell
