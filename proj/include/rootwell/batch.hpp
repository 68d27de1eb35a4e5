#ifndef ROOTWELL_BATCH_HPP
#define ROOTWELL_BATCH_HPP

#include <span>
#include <vector>

#include "rootwell/closed_form.hpp"
#include "rootwell/spectrum.hpp"

namespace rootwell {

// Batch kernels come in two flavours: a serial reference and an OpenMP
// parallel version.  Both produce identical output (each element is an
// independent pure evaluation); tests compare them bit for bit.
enum class exec_mode { serial, parallel };

// Sample a closed-form wavefunction on a grid.
grid_function sample_wavefunction(const wavefunction& w, std::span<const double> xs,
                                  exec_mode mode);

// Sample the quasi-polynomial state n on a grid.
grid_function sample_quasipoly(const physical_system& sys, int n,
                               std::span<const double> xs, exec_mode mode);

// Exact roots a_n for n in [n_lo, n_hi].
std::vector<double> solve_exact_roots(int n_lo, int n_hi, exec_mode mode);

enum class spectrum_mode { exact, approx, quasipoly };

struct spectrum_row {
    int n = 0;
    double a_n = 0.0;
    double energy = 0.0;
    double rel_err_vs_exact = 0.0;  // populated only in approx mode (else NaN)
};

// Spectrum table for a range of quantum numbers.  approx mode also solves the
// exact roots to fill the relative-error column.
std::vector<spectrum_row> spectrum_table(const physical_system& sys, int n_lo, int n_hi,
                                         spectrum_mode mode, exec_mode exec);

} // namespace rootwell

#endif
