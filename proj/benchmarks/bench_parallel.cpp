// Times the OpenMP batch kernels against their serial reference.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rootwell/batch.hpp"
#include "rootwell/oracle.hpp"

using namespace rootwell;

namespace {

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main() {
    const physical_system sys{1.0, 1.0, -1.0};
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel mode falls back to serial\n");
#endif

    auto xs = uniform_grid(0.0, 40.0, 20000);
    const auto sp = spectral_point_for(sys, -0.42);
    wavefunction w(sys, sp, {0.7, 0.4});

    // warm up (tail matching, lazy init)
    (void)sample_wavefunction(w, xs, exec_mode::serial);

    const double t_grid_s = time_ms([&] { sample_wavefunction(w, xs, exec_mode::serial); });
    const double t_grid_p = time_ms([&] { sample_wavefunction(w, xs, exec_mode::parallel); });
    std::printf("wavefunction grid  (20000 pts): serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
                t_grid_s, t_grid_p, t_grid_s / t_grid_p);

    const double t_quasi_s = time_ms([&] { sample_quasipoly(sys, 4, xs, exec_mode::serial); });
    const double t_quasi_p = time_ms([&] { sample_quasipoly(sys, 4, xs, exec_mode::parallel); });
    std::printf("quasipoly grid     (20000 pts): serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
                t_quasi_s, t_quasi_p, t_quasi_s / t_quasi_p);

    const double t_roots_s = time_ms([&] { solve_exact_roots(1, 20, exec_mode::serial); });
    const double t_roots_p = time_ms([&] { solve_exact_roots(1, 20, exec_mode::parallel); });
    std::printf("exact roots        (n = 1..20): serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
                t_roots_s, t_roots_p, t_roots_s / t_roots_p);

    const double t_tab_s = time_ms([&] {
        spectrum_table(sys, 1, 20, spectrum_mode::approx, exec_mode::serial);
    });
    const double t_tab_p = time_ms([&] {
        spectrum_table(sys, 1, 20, spectrum_mode::approx, exec_mode::parallel);
    });
    std::printf("spectrum table     (n = 1..20): serial %8.1f ms   parallel %8.1f ms   speedup %.2fx\n",
                t_tab_s, t_tab_p, t_tab_s / t_tab_p);
    return 0;
}
