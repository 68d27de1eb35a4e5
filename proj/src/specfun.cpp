#include "rootwell/specfun.hpp"

#include <cmath>
#include <limits>

namespace rootwell::specfun {

namespace {

constexpr int series_cap = 500;
constexpr int series_cap_mp = 4000;
constexpr double eps_d = 2.2e-16;
// Escalate when the running condition estimate sum|t_k| / |sum t_k| exceeds
// this, or when the double-path error estimate misses the 1e-12 target.
constexpr double condition_limit = 1e4;

double error_target(double value) {
    return 1e-12 * std::max(1.0, std::abs(value));
}

struct series_sum {
    double sum = 1.0;
    double sum_abs = 1.0;
    double tail = 0.0;   // |last term|
    int terms = 1;
    bool converged = false;
    bool overflowed = false;
};

// Plain power series sum_k (a)_k/(b)_k z^k/k! with compensated accumulation.
// Stops once three consecutive terms satisfy |t| <= 1e-17 |partial sum|.
series_sum kummer_series(double a, double b, double z) {
    series_sum s;
    double term = 1.0;
    double comp = 0.0;
    int consecutive = 0;
    for (int k = 0; k < series_cap; ++k) {
        term *= (a + k) / (b + k) * z / (k + 1);
        if (!std::isfinite(term) || std::abs(s.sum) > 1e290) {
            s.overflowed = true;
            return s;
        }
        double y = term - comp;
        double t = s.sum + y;
        comp = (t - s.sum) - y;
        s.sum = t;
        s.sum_abs += std::abs(term);
        ++s.terms;
        if (std::abs(term) <= 1e-17 * std::abs(s.sum)) {
            if (++consecutive >= 3) {
                s.tail = std::abs(term);
                s.converged = true;
                return s;
            }
        } else {
            consecutive = 0;
        }
    }
    s.tail = std::abs(term);
    return s;
}

struct series_sum_mp {
    mp_real sum;
    mp_real sum_abs;
    double tail = 0.0;
    int terms = 1;
    bool converged = false;
};

series_sum_mp kummer_series_mp(double a, double b, const mp_real& z) {
    series_sum_mp s;
    s.sum = mp_real(1.0);
    s.sum_abs = mp_real(1.0);
    mp_real term(1.0);
    int consecutive = 0;
    for (int k = 0; k < series_cap_mp; ++k) {
        term *= (mp_real(a) + mp_real(double(k))) / (mp_real(b) + mp_real(double(k)));
        term *= z / mp_real(double(k + 1));
        s.sum += term;
        s.sum_abs += abs(term);
        ++s.terms;
        mp_real thresh = abs(s.sum) * mp_real(1e-52);
        if (abs(term) <= thresh) {
            if (++consecutive >= 3) {
                s.tail = abs(term).to_double();
                s.converged = true;
                return s;
            }
        } else {
            consecutive = 0;
        }
    }
    s.tail = abs(term).to_double();
    return s;
}

void check_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw domain_error(std::string(what) + " must be finite");
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

} // namespace

namespace detail {

double recip_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    int sign = 0;
    double lg = lgamma_r(x, &sign);
    return sign * std::exp(-lg);
}

mp_real recip_gamma_mp(double x) {
    if (is_nonpositive_integer(x)) return mp_real(0.0);
    return mp_real(1.0) / gamma(mp_real(x));
}

mp_real kummer_1f1_mp(double a, double b, const mp_real& z, int* terms, mp_real* sum_abs) {
    series_sum_mp s = kummer_series_mp(a, b, z);
    if (!s.converged) throw precision_error("1F1 series did not converge in extended precision");
    if (terms) *terms = s.terms;
    if (sum_abs) *sum_abs = s.sum_abs;
    return s.sum;
}

namespace {

struct hermite_mp_parts {
    mp_real value;
    mp_real branch_abs;  // |B1| + |B2|, the cancellation scale
    int terms = 0;
};

hermite_mp_parts hermite_mp_impl(double nu, const mp_real& z) {
    hermite_mp_parts out;
    mp_real rg1 = recip_gamma_mp((1.0 - nu) / 2.0);
    mp_real rg2 = recip_gamma_mp(-nu / 2.0);
    mp_real z2 = z * z;
    int t1 = 0, t2 = 0;
    mp_real b1 = (rg1.sign() != 0) ? kummer_1f1_mp(-nu / 2.0, 0.5, z2, &t1) * rg1 : mp_real(0.0);
    mp_real b2 = (rg2.sign() != 0)
                     ? mp_real(2.0) * z * kummer_1f1_mp((1.0 - nu) / 2.0, 1.5, z2, &t2) * rg2
                     : mp_real(0.0);
    mp_real pref = pow(mp_real(2.0), mp_real(nu)) * sqrt(mp_real::pi());
    out.value = pref * (b1 - b2);
    out.branch_abs = pref * (abs(b1) + abs(b2));
    out.terms = t1 + t2;
    return out;
}

} // namespace

mp_real hermite_h_mp(double nu, const mp_real& z, int* terms) {
    hermite_mp_parts p = hermite_mp_impl(nu, z);
    if (terms) *terms = p.terms;
    return p.value;
}

} // namespace detail

eval_result kummer_1f1(double a, double b, double z) {
    check_finite(a, "a");
    check_finite(b, "b");
    check_finite(z, "z");
    if (is_nonpositive_integer(b))
        throw pole_error("1F1 undefined for b = " + std::to_string(b));

    series_sum s = kummer_series(a, b, z);
    if (s.converged && !s.overflowed) {
        double cond = s.sum_abs / std::max(std::abs(s.sum), 1e-300);
        double err = eps_d * (2.0 + s.terms / 8.0) * s.sum_abs + s.tail;
        if (cond <= condition_limit && err <= error_target(s.sum)) {
            return {s.sum, err, s.terms, false};
        }
    }

    series_sum_mp m = kummer_series_mp(a, b, mp_real(z));
    if (!m.converged) throw precision_error("1F1 series exhausted the extended-precision term cap");
    double value = m.sum.to_double();
    double err = mp_real::epsilon() * m.sum_abs.to_double() + m.tail + 0.5 * eps_d * std::abs(value);
    if (!std::isfinite(value) || err > error_target(value))
        throw precision_error("1F1 error bound unreachable after escalation");
    return {value, err, m.terms, true};
}

eval_result hermite_h(double nu, double z) {
    check_finite(nu, "nu");
    check_finite(z, "z");

    double rg1 = detail::recip_gamma((1.0 - nu) / 2.0);
    double rg2 = detail::recip_gamma(-nu / 2.0);
    double z2 = z * z;

    series_sum m1, m2;
    bool bad = false;
    int terms = 0;
    if (rg1 != 0.0) {
        m1 = kummer_series(-nu / 2.0, 0.5, z2);
        bad = bad || !m1.converged || m1.overflowed;
        terms += m1.terms;
    } else {
        m1.sum = 0.0; m1.sum_abs = 0.0; m1.terms = 0;
    }
    if (rg2 != 0.0) {
        m2 = kummer_series((1.0 - nu) / 2.0, 1.5, z2);
        bad = bad || !m2.converged || m2.overflowed;
        terms += m2.terms;
    } else {
        m2.sum = 0.0; m2.sum_abs = 0.0; m2.terms = 0;
    }

    if (!bad) {
        double pref = std::exp2(nu) * std::sqrt(M_PI);
        double b1 = rg1 * m1.sum;
        double b2 = 2.0 * z * rg2 * m2.sum;
        double bracket = b1 - b2;
        double value = pref * bracket;
        double branch_abs = std::abs(b1) + std::abs(b2);
        double cond_series = (m1.sum_abs * std::abs(rg1) + m2.sum_abs * 2.0 * std::abs(z) * std::abs(rg2)) /
                             std::max(std::abs(bracket), 1e-300);
        double cond_combo = branch_abs / std::max(std::abs(bracket), 1e-300);
        double err = pref * (eps_d * (2.0 + terms / 8.0) *
                                 (m1.sum_abs * std::abs(rg1) + m2.sum_abs * 2.0 * std::abs(z) * std::abs(rg2)) +
                             m1.tail * std::abs(rg1) + m2.tail * 2.0 * std::abs(z) * std::abs(rg2) +
                             eps_d * branch_abs) +
                     eps_d * std::abs(value);
        if (std::isfinite(value) && std::max(cond_series, cond_combo) <= condition_limit &&
            err <= error_target(value)) {
            return {value, err, terms, false};
        }
    }

    detail::hermite_mp_parts p = detail::hermite_mp_impl(nu, mp_real(z));
    double value = p.value.to_double();
    double err = p.branch_abs.to_double() * mp_real::epsilon() * 50.0 + 0.5 * eps_d * std::abs(value);
    if (!std::isfinite(value) || err > error_target(value))
        throw precision_error("Hermite branches cancel beyond the reach of extended precision");
    return {value, err, p.terms, true};
}

eval_result hermite_h_deriv(double nu, double z) {
    check_finite(nu, "nu");
    check_finite(z, "z");
    if (nu == 0.0) return {0.0, 0.0, 0, false};
    eval_result inner = hermite_h(nu - 1.0, z);
    double f = 2.0 * nu;
    return {f * inner.value, std::abs(f) * inner.abs_error, inner.terms_used, inner.escalated};
}

log_gamma_result log_gamma_real(double x) {
    check_finite(x, "x");
    if (is_nonpositive_integer(x))
        return {std::numeric_limits<double>::infinity(), 0};
    int sign = 0;
    double lg = lgamma_r(x, &sign);
    return {lg, sign};
}

} // namespace rootwell::specfun
