#include "rootwell/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "rootwell/quadrature.hpp"
#include "rootwell/specfun.hpp"

namespace rootwell {

namespace {

constexpr double eps_d = 2.2e-16;

// Safeguarded secant (Illinois) inside a sign-change bracket; every fourth
// stalled step falls back to bisection.
double bracketed_root(const std::function<double(double)>& f, double lo, double hi,
                      double f_lo, double f_hi, double x_tol) {
    int stale = 0;
    for (int iter = 0; iter < 300; ++iter) {
        if (hi - lo <= x_tol) break;
        double x;
        const double df = f_hi - f_lo;
        if (df != 0.0) {
            x = hi - f_hi * (hi - lo) / df;
            const double margin = 0.01 * (hi - lo);
            if (!(x > lo + margin && x < hi - margin)) x = 0.5 * (lo + hi);
        } else {
            x = 0.5 * (lo + hi);
        }
        if (stale >= 3) {
            x = 0.5 * (lo + hi);
            stale = 0;
        }
        const double fx = f(x);
        if (fx == 0.0) return x;
        if ((fx < 0.0) == (f_lo < 0.0)) {
            lo = x;
            f_lo = fx;
            f_hi *= 0.5;  // Illinois weighting keeps the secant moving
            ++stale;
        } else {
            hi = x;
            f_hi = fx;
            f_lo *= 0.5;
            ++stale;
        }
        if ((fx < 0.0) != (f_lo < 0.0)) stale = 0;
    }
    return 0.5 * (lo + hi);
}

// Two-term Watson expansion of int_x0^inf exp(phi(x)) dx for a steeply
// decreasing phi; phi = 2*(tail log form).  Relative accuracy ~ (phi''/phi'^2)^2.
double tail_exponential_integral(double x0, double log_c2, double delta2, double kappa2,
                                 double sigma2) {
    auto phi = [&](double x) { return log_c2 - delta2 * x / 2.0 - kappa2 * std::sqrt(x) + sigma2 * std::log(x); };
    auto phi_p = [&](double x) { return -delta2 / 2.0 - kappa2 / (2.0 * std::sqrt(x)) + sigma2 / x; };
    auto phi_pp = [&](double x) { return kappa2 / (4.0 * x * std::sqrt(x)) - sigma2 / (x * x); };
    const double p = phi_p(x0);
    if (!(p < 0.0)) return 0.0;  // not decaying; tail contribution ill-defined
    const double correction = 1.0 + phi_pp(x0) / (p * p);
    return std::exp(phi(x0)) * (-1.0 / p) * correction;
}

struct tail_log_form {
    double log_scale;
    double delta;
    double kappa;
    double sigma;
    double match_x;
};

tail_log_form tail_form_of(const physical_system& sys, const wavefunction& w) {
    // Read the matched tail form back off the evaluator just past the switch.
    const double xs = w.x_switch();
    tail_log_form t;
    t.delta = w.point().delta;
    t.kappa = 4.0 * sys.mass * sys.v0 / (sys.hbar * sys.hbar * w.point().delta);
    // Recover sigma and log-scale from value and derivative just past the switch.
    const double xa = xs * 1.000001;
    psi_eval e = w.value_and_derivative(xa);
    const double lp = e.dpsi_dx / e.psi;
    t.sigma = xa * (lp + 0.5 * t.delta + t.kappa / (2.0 * std::sqrt(xa)));
    t.log_scale = std::log(std::abs(e.psi)) + 0.5 * t.delta * xa + t.kappa * std::sqrt(xa) -
                  t.sigma * std::log(xa);
    t.match_x = xa;
    return t;
}

} // namespace

double coefficient_ratio(double a) {
    if (!(std::isfinite(a) && a > 0.0)) throw domain_error("coefficient ratio requires a > 0");
    const double s = std::sqrt(2.0 * a);
    auto m2 = specfun::kummer_1f1(1.0 - a / 2.0, 1.5, 2.0 * a);
    auto m1 = specfun::kummer_1f1(-a / 2.0, 0.5, 2.0 * a);
    auto h1 = specfun::hermite_h(a - 1.0, s);
    auto h2 = specfun::hermite_h(a, s);

    double num = 2.0 * a * m2.value + m1.value;
    double den = s * h1.value - h2.value;
    const double den_scale = s * std::abs(h1.value) + std::abs(h2.value);
    const double num_scale = 2.0 * a * std::abs(m2.value) + std::abs(m1.value);

    if (std::abs(den) * 1e4 < den_scale || std::abs(num) * 1e4 < num_scale) {
        // combination cancels; redo both in extended precision
        mp_real am(a);
        mp_real sm = sqrt(mp_real(2.0) * am);
        mp_real z = mp_real(2.0) * am;
        mp_real numm = mp_real(2.0) * am * specfun::detail::kummer_1f1_mp(1.0 - a / 2.0, 1.5, z) +
                       specfun::detail::kummer_1f1_mp(-a / 2.0, 0.5, z);
        mp_real denm = sm * specfun::detail::hermite_h_mp(a - 1.0, sm) -
                       specfun::detail::hermite_h_mp(a, sm);
        num = numm.to_double();
        den = denm.to_double();
    }

    const double den_err = s * h1.abs_error + h2.abs_error + 4.0 * eps_d * den_scale;
    if (std::abs(den) <= 10.0 * den_err)
        throw singular_ratio_error("boundary-condition denominator vanishes at a = " +
                                   std::to_string(a));
    return num / den;
}

spectrum_fn_eval spectrum_fn_scaled(double a) {
    if (!(std::isfinite(a) && a > 0.0)) throw domain_error("spectrum function requires a > 0");
    const double s = std::sqrt(2.0 * a);
    auto h1 = specfun::hermite_h(a - 1.0, -s);
    auto h2 = specfun::hermite_h(a, -s);
    spectrum_fn_eval out;
    out.value = s * h1.value + h2.value;
    out.scale = s * std::abs(h1.value) + std::abs(h2.value);
    out.abs_error = s * h1.abs_error + h2.abs_error + 2.0 * eps_d * out.scale;
    return out;
}

double spectrum_fn(double a) { return spectrum_fn_scaled(a).value; }

double approx_root(int n, bool refine) {
    if (n < 1) throw domain_error("quantum number n must be >= 1");
    const double coarse = double(n) - 1.0 / (2.0 * M_PI);
    if (!refine) return coarse;
    double a = coarse;
    for (int i = 0; i < 200; ++i) {
        const double next = coarse + a * std::exp(-2.0 * a) / M_PI;
        if (std::abs(next - a) < 1e-12) return next;
        a = next;
    }
    throw convergence_error("fixed-point refinement stalled");
}

double solve_exact_root(int n) {
    const double seed = approx_root(n, true);
    double half = 0.06;
    double lo = 0.0, hi = 0.0, f_lo = 0.0, f_hi = 0.0;
    bool bracketed = false;
    for (int attempt = 0; attempt <= 8; ++attempt) {
        lo = std::max(seed - half, 1e-6);
        hi = seed + half;
        f_lo = spectrum_fn(lo);
        f_hi = spectrum_fn(hi);
        if ((f_lo < 0.0) != (f_hi < 0.0)) {
            bracketed = true;
            break;
        }
        half *= 1.6;
    }
    if (!bracketed)
        throw bracket_error("no sign change around the approximate root for n = " +
                            std::to_string(n));

    const double root = bracketed_root([](double a) { return spectrum_fn(a); }, lo, hi, f_lo,
                                       f_hi, 1e-13 * std::max(1.0, seed));
    const spectrum_fn_eval at = spectrum_fn_scaled(root);
    if (std::abs(at.value) > 1e-10 * at.scale)
        throw convergence_error("root polish left |f| above 1e-10 * scale at n = " +
                                std::to_string(n));
    return root;
}

double energy_from_a(const physical_system& sys, double a) {
    validate(sys);
    if (!(std::isfinite(a) && a > 0.0)) throw domain_error("energy map requires a > 0");
    if (sys.v0 > 0.0) throw domain_error("bound spectra require v0 < 0");
    const double m = sys.mass;
    return -std::pow(m * m * sys.v0 * sys.v0 / (sys.hbar * a), 2.0 / 3.0) / (2.0 * m);
}

double approx_spectrum(const physical_system& sys, int n) {
    return energy_from_a(sys, approx_root(n, false));
}

bound_state solve_bound_state(const physical_system& sys, int n) {
    validate(sys);
    if (sys.v0 > 0.0) throw domain_error("bound states require v0 < 0");
    if (n < 1) throw domain_error("quantum number n must be >= 1");

    bound_state bs;
    bs.n = n;
    bs.a_n = solve_exact_root(n);
    bs.energy = energy_from_a(sys, bs.a_n);
    bs.method = state_method::exact;
    try {
        bs.coeffs = {coefficient_ratio(bs.a_n), 1.0};
    } catch (const singular_ratio_error&) {
        // pure-c1 gauge: the numerator must vanish instead
        bs.coeffs = {1.0, 0.0};
    }

    const spectral_point sp = spectral_point_for(sys, bs.energy);
    wavefunction w(sys, sp, bs.coeffs);
    const double xs = w.x_switch();
    auto f = [&](double x) { const double p = w.value(x); return p * p; };
    quad_result body = integrate(f, 0.0, xs, 1e-9, 1e-300);

    tail_log_form t = tail_form_of(sys, w);
    const double tail = tail_exponential_integral(t.match_x, 2.0 * t.log_scale, 2.0 * t.delta,
                                                  2.0 * t.kappa, 2.0 * t.sigma);
    const double total = body.value + tail;
    if (!(total > 0.0)) throw precision_error("normalization integral not positive");
    bs.norm = 1.0 / std::sqrt(total);
    return bs;
}

wavefunction bound_wavefunction(const physical_system& sys, const bound_state& bs) {
    const spectral_point sp = spectral_point_for(sys, bs.energy);
    solution_coefficients c{bs.coeffs.c1 * bs.norm, bs.coeffs.c2 * bs.norm};
    return wavefunction(sys, sp, c);
}

double eval_F(double a) {
    if (!(std::isfinite(a) && a > 0.0)) throw domain_error("F requires a > 0");
    const double s = std::sqrt(2.0 * a);
    auto h1 = specfun::hermite_h(a - 1.0, -s);
    auto h2 = specfun::hermite_h(a, -s);
    if (std::abs(h2.value) <= 10.0 * (h2.abs_error + 1e-300))
        throw pole_error("denominator Hermite function vanishes at a = " + std::to_string(a));
    return s * h1.value / h2.value + 1.0;
}

int count_nodes(const physical_system& sys, const bound_state& bs) {
    wavefunction w = bound_wavefunction(sys, bs);
    const double x_turn = (sys.v0 / bs.energy) * (sys.v0 / bs.energy);
    const double x_hi = std::min(w.x_switch() * 0.98, x_turn * 1.2);
    const double x_lo = 1e-4 / w.point().delta;

    const int count = 4000;
    std::vector<double> vals(count);
    double peak = 0.0;
    std::vector<double> xs(count);
    const double ratio = std::log(x_hi / x_lo) / (count - 1);
    for (int i = 0; i < count; ++i) {
        xs[i] = x_lo * std::exp(ratio * i);
        vals[i] = w.value(xs[i]);
        peak = std::max(peak, std::abs(vals[i]));
    }
    const double floor = 1e-9 * peak;
    int nodes = 0;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i < count; ++i) {
        if (std::abs(vals[i]) < floor) continue;
        if (have_prev && (vals[i] < 0.0) != (prev < 0.0)) ++nodes;
        prev = vals[i];
        have_prev = true;
    }
    return nodes;
}

double overlap(const physical_system& sys, const bound_state& bn, const bound_state& bm) {
    wavefunction wn = bound_wavefunction(sys, bn);
    wavefunction wm = bound_wavefunction(sys, bm);
    const double x_body = std::max(wn.x_switch(), wm.x_switch());
    auto f = [&](double x) { return wn.value(x) * wm.value(x); };
    quad_result body = integrate(f, 0.0, x_body, 1e-9, 1e-12);

    tail_log_form tn = tail_form_of(sys, wn);
    tail_log_form tm = tail_form_of(sys, wm);
    const double sign = (wn.value(x_body) < 0) == (wm.value(x_body) < 0) ? 1.0 : -1.0;
    const double tail = sign * tail_exponential_integral(
                                   x_body, tn.log_scale + tm.log_scale, tn.delta + tm.delta,
                                   tn.kappa + tm.kappa, tn.sigma + tm.sigma);
    return body.value + tail;
}

} // namespace rootwell
