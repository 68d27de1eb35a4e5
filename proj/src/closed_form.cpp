#include "rootwell/closed_form.hpp"

#include <cmath>
#include <limits>

#include "rootwell/specfun.hpp"

namespace rootwell {

namespace {

constexpr double combo_condition_limit = 1e4;

int sign_of(double x) { return x < 0 ? -1 : 1; }

// The four special-function values entering u and its derivatives:
//   v  = c1 H_a(y) + c2 1F1(-a/2; 1/2; y^2)
//   v' = 2a c1 H_{a-1}(y) - 2a y c2 1F1(1-a/2; 3/2; y^2)
// u = e^{-sy} v,  u' = e^{-sy} (v' - s v),  u'' = 2 (y - s) e^{-sy} v'
// (the last uses v'' = 2y v' - 2a v and s^2 = 2a).
struct u_parts {
    double u = 0.0;
    double dudy = 0.0;
    double vprime_sc = 0.0;  // e^{-sy} v'
    bool escalated = false;
};

u_parts eval_u_parts(const spectral_point& sp, const solution_coefficients& c, double y) {
    if (c.c1 == 0.0 && c.c2 == 0.0)
        throw domain_error("solution coefficients (0, 0) select no solution");
    const double a = sp.a;
    const double s = std::sqrt(2.0 * a);

    auto ha = specfun::hermite_h(a, y);
    auto ham1 = specfun::hermite_h(a - 1.0, y);
    auto m1 = specfun::kummer_1f1(-a / 2.0, 0.5, y * y);
    auto m2 = specfun::kummer_1f1(1.0 - a / 2.0, 1.5, y * y);

    const double tva = c.c1 * ha.value;
    const double tvb = c.c2 * m1.value;
    const double tpa = 2.0 * a * c.c1 * ham1.value;
    const double tpb = -2.0 * a * y * c.c2 * m2.value;
    const double v = tva + tvb;
    const double vp = tpa + tpb;
    const double w = vp - s * v;  // du/dy bracket

    const double abs_v = std::abs(tva) + std::abs(tvb);
    const double abs_vp = std::abs(tpa) + std::abs(tpb);
    const double abs_w = abs_vp + s * abs_v;
    const double cond = std::max({abs_v / std::max(std::abs(v), 1e-300),
                                  abs_vp / std::max(std::abs(vp), 1e-300),
                                  abs_w / std::max(std::abs(w), 1e-300)});

    if (cond <= combo_condition_limit) {
        const double pref = std::exp(-s * y);
        u_parts out;
        out.u = pref * v;
        out.dudy = pref * w;
        out.vprime_sc = pref * vp;
        out.escalated = ha.escalated || ham1.escalated || m1.escalated || m2.escalated;
        return out;
    }

    // Combination cancels: rebuild every piece in extended precision.
    mp_real ym(y);
    mp_real am(a);
    mp_real sm = sqrt(mp_real(2.0) * am);
    mp_real y2 = ym * ym;
    mp_real H_a = specfun::detail::hermite_h_mp(a, ym);
    mp_real H_am1 = specfun::detail::hermite_h_mp(a - 1.0, ym);
    mp_real M1 = specfun::detail::kummer_1f1_mp(-a / 2.0, 0.5, y2);
    mp_real M2 = specfun::detail::kummer_1f1_mp(1.0 - a / 2.0, 1.5, y2);
    mp_real vm = mp_real(c.c1) * H_a + mp_real(c.c2) * M1;
    mp_real vpm = mp_real(2.0 * a) * (mp_real(c.c1) * H_am1 - ym * mp_real(c.c2) * M2);
    mp_real wm = vpm - sm * vm;
    mp_real pref = exp(-sm * ym);
    u_parts out;
    out.u = (pref * vm).to_double();
    out.dudy = (pref * wm).to_double();
    out.vprime_sc = (pref * vpm).to_double();
    out.escalated = true;
    return out;
}

struct u_parts_mp {
    mp_real u;
    mp_real dudy;
    mp_real vprime_sc;
};

u_parts_mp eval_u_parts_mp(const spectral_point& sp, const solution_coefficients& c,
                           const mp_real& y) {
    if (c.c1 == 0.0 && c.c2 == 0.0)
        throw domain_error("solution coefficients (0, 0) select no solution");
    const double a = sp.a;
    mp_real am(a);
    mp_real sm = sqrt(mp_real(2.0) * am);
    mp_real y2 = y * y;
    mp_real H_a = specfun::detail::hermite_h_mp(a, y);
    mp_real H_am1 = specfun::detail::hermite_h_mp(a - 1.0, y);
    mp_real M1 = specfun::detail::kummer_1f1_mp(-a / 2.0, 0.5, y2);
    mp_real M2 = specfun::detail::kummer_1f1_mp(1.0 - a / 2.0, 1.5, y2);
    mp_real vm = mp_real(c.c1) * H_a + mp_real(c.c2) * M1;
    mp_real vpm = mp_real(2.0 * a) * (mp_real(c.c1) * H_am1 - y * mp_real(c.c2) * M2);
    u_parts_mp out;
    mp_real pref = exp(-sm * y);
    out.u = pref * vm;
    out.dudy = pref * (vpm - sm * vm);
    out.vprime_sc = pref * vpm;
    return out;
}

} // namespace

void validate(const physical_system& sys) {
    if (!(std::isfinite(sys.mass) && sys.mass > 0.0))
        throw domain_error("mass must be positive and finite");
    if (!(std::isfinite(sys.hbar) && sys.hbar > 0.0))
        throw domain_error("hbar must be positive and finite");
    if (!(std::isfinite(sys.v0) && sys.v0 != 0.0))
        throw domain_error("potential strength v0 must be nonzero and finite");
}

void validate(const grid_function& g) {
    if (g.xs.size() != g.values.size() || g.xs.size() < 2)
        throw domain_error("grid_function needs matching xs/values of length >= 2");
    for (std::size_t i = 0; i < g.xs.size(); ++i) {
        if (!std::isfinite(g.xs[i]) || !std::isfinite(g.values[i]) || g.xs[i] < 0.0)
            throw domain_error("grid_function entries must be finite, xs non-negative");
        if (i > 0 && !(g.xs[i] > g.xs[i - 1]))
            throw domain_error("grid_function xs must be strictly increasing");
    }
}

spectral_point spectral_point_for(const physical_system& sys, double energy) {
    validate(sys);
    if (!(std::isfinite(energy) && energy < 0.0))
        throw domain_error("spectral point requires E < 0 (scattering regime out of scope)");
    spectral_point sp;
    sp.energy = energy;
    sp.delta = std::sqrt(-8.0 * sys.mass * energy) / sys.hbar;
    sp.a = sys.mass * sys.mass * sys.v0 * sys.v0 /
           (sys.hbar * std::pow(-2.0 * sys.mass * energy, 1.5));
    return sp;
}

double map_y(const spectral_point& sp, int v0_sign, double x) {
    if (v0_sign != -1 && v0_sign != 1) throw domain_error("v0_sign must be -1 or +1");
    if (!(std::isfinite(x) && x >= 0.0)) throw domain_error("map_y requires x >= 0");
    return v0_sign * std::sqrt(sp.delta * x) + std::sqrt(2.0 * sp.a);
}

u_eval eval_u_and_dudy(const spectral_point& sp, const solution_coefficients& c, double y) {
    u_parts p = eval_u_parts(sp, c, y);
    return {p.u, p.dudy, p.escalated};
}

wavefunction::wavefunction(const physical_system& sys, const spectral_point& sp,
                           const solution_coefficients& c)
    : sys_(sys), sp_(sp), c_(c), v0_sign_(sign_of(sys.v0)) {
    validate(sys);
    if (c.c1 == 0.0 && c.c2 == 0.0)
        throw domain_error("solution coefficients (0, 0) select no solution");
    kappa_ = 4.0 * sys.mass * sys.v0 / (sys.hbar * sys.hbar * sp.delta);
    if (v0_sign_ < 0) {
        const double root = std::sqrt(2.0 * sp.a) + 6.0;
        x_switch_ = root * root / sp.delta;
    } else {
        x_switch_ = std::numeric_limits<double>::infinity();
    }
}

psi_eval wavefunction::exact_eval(double x) const {
    const double y = map_y(sp_, v0_sign_, x);
    u_parts p = eval_u_parts(sp_, c_, y);
    const double damp = std::exp(-sp_.delta * x / 2.0);
    psi_eval out;
    out.psi = damp * p.dudy;
    // dpsi/dx = e^{-dx/2} (-(d/2) u' + u'' y') and u'' y' = delta e^{-sy} v'
    out.dpsi_dx = damp * (-0.5 * sp_.delta * p.dudy + sp_.delta * p.vprime_sc);
    out.escalated = p.escalated;
    return out;
}

const wavefunction::tail_params& wavefunction::tail() const {
    std::call_once(tail_once_, [this] {
        double xm = x_switch_;
        psi_eval at{};
        for (int attempt = 0; attempt < 4; ++attempt) {
            at = exact_eval(xm);
            if (at.psi != 0.0) break;
            xm *= 1.04;  // a node exactly at the match point; nudge outward
        }
        if (at.psi == 0.0) throw precision_error("tail matching found no nonzero value");
        const double delta = sp_.delta;
        const double logd = at.dpsi_dx / at.psi;
        tail_.sigma = xm * (logd + 0.5 * delta + kappa_ / (2.0 * std::sqrt(xm)));
        tail_.sign = sign_of(at.psi);
        tail_.log_scale = std::log(std::abs(at.psi)) + 0.5 * delta * xm +
                          kappa_ * std::sqrt(xm) - tail_.sigma * std::log(xm);
        // ODE residual of the matched form just past the switch point.
        const double q0 = -2.0 * sys_.mass * sp_.energy / (sys_.hbar * sys_.hbar);
        double worst = 0.0;
        for (double factor : {1.05, 1.3, 1.8}) {
            const double x = xm * factor;
            const double lp = -0.5 * delta - kappa_ / (2.0 * std::sqrt(x)) + tail_.sigma / x;
            const double lpp = kappa_ / (4.0 * x * std::sqrt(x)) - tail_.sigma / (x * x);
            const double q = q0 + 2.0 * sys_.mass * sys_.v0 /
                                      (sys_.hbar * sys_.hbar * std::sqrt(x));
            worst = std::max(worst, std::abs(lp * lp + lpp - q) / std::abs(q));
        }
        tail_.residual = worst;
        if (worst > 5e-2)
            throw precision_error("matched tail fails its ODE residual check");
        tail_.valid = true;
    });
    return tail_;
}

psi_eval wavefunction::tail_eval(double x) const {
    const tail_params& t = tail();
    const double lp = -0.5 * sp_.delta - kappa_ / (2.0 * std::sqrt(x)) + t.sigma / x;
    const double lv = t.log_scale - 0.5 * sp_.delta * x - kappa_ * std::sqrt(x) +
                      t.sigma * std::log(x);
    psi_eval out;
    out.psi = t.sign * std::exp(lv);
    out.dpsi_dx = out.psi * lp;
    out.escalated = false;
    return out;
}

double wavefunction::value(double x) const { return value_and_derivative(x).psi; }

psi_eval wavefunction::value_and_derivative(double x) const {
    if (!(std::isfinite(x) && x >= 0.0)) throw domain_error("psi requires x >= 0");
    if (x > x_switch_) return tail_eval(x);
    return exact_eval(x);
}

double wavefunction::tail_match_residual() const { return tail().residual; }

double eval_psi(const physical_system& sys, const spectral_point& sp,
                const solution_coefficients& c, double x) {
    return wavefunction(sys, sp, c).value(x);
}

double quasipoly_energy(const physical_system& sys, int n) {
    validate(sys);
    if (sys.v0 > 0.0) throw domain_error("quasi-polynomial family requires v0 < 0");
    if (n < 1) throw domain_error("quantum number n must be >= 1");
    return 0.5 * sys.v0 * std::cbrt(-sys.mass * sys.v0 / (sys.hbar * sys.hbar)) *
           std::pow(double(n), -2.0 / 3.0);
}

double quasipoly_psi(const physical_system& sys, int n, double x) {
    if (!(std::isfinite(x) && x >= 0.0)) throw domain_error("psi requires x >= 0");
    const double energy = quasipoly_energy(sys, n);
    const spectral_point sp = spectral_point_for(sys, energy);
    const double s = std::sqrt(2.0 * n);
    const double y = s - std::sqrt(sp.delta * x);
    auto hn = specfun::hermite_h(double(n), y);
    auto hn1 = specfun::hermite_h(double(n - 1), y);
    return std::exp(-s * y - 0.5 * sp.delta * x) * (hn.value - s * hn1.value);
}

namespace detail {

psi_mp eval_psi_mp(const physical_system& sys, const spectral_point& sp,
                   const solution_coefficients& c, double x) {
    if (!(std::isfinite(x) && x >= 0.0)) throw domain_error("psi requires x >= 0");
    mp_real xm(x);
    mp_real dm(sp.delta);
    mp_real y = mp_real(double(sign_of(sys.v0))) * sqrt(dm * xm) + sqrt(mp_real(2.0 * sp.a));
    u_parts_mp p = eval_u_parts_mp(sp, c, y);
    mp_real damp = exp(mp_real(-0.5) * dm * xm);
    psi_mp out;
    out.psi = damp * p.dudy;
    out.dpsi_dx = damp * (mp_real(-0.5) * dm * p.dudy + dm * p.vprime_sc);
    return out;
}

} // namespace detail

} // namespace rootwell
