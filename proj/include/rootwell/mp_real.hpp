#ifndef ROOTWELL_MP_REAL_HPP
#define ROOTWELL_MP_REAL_HPP

#include <mpfr.h>

#include <utility>

namespace rootwell {

// Thin RAII value type over mpfr_t used by the extended-precision escalation
// path. Fixed working precision; round-to-nearest throughout.
class mp_real {
  public:
    static constexpr mpfr_prec_t precision = 192;

    mp_real() { mpfr_init2(v_, precision); mpfr_set_zero(v_, 1); }
    mp_real(double x) { mpfr_init2(v_, precision); mpfr_set_d(v_, x, MPFR_RNDN); }
    mp_real(const mp_real& o) { mpfr_init2(v_, precision); mpfr_set(v_, o.v_, MPFR_RNDN); }
    mp_real(mp_real&& o) noexcept {
        mpfr_init2(v_, precision);
        mpfr_swap(v_, o.v_);
    }
    ~mp_real() { mpfr_clear(v_); }

    mp_real& operator=(const mp_real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    mp_real& operator=(mp_real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    mp_real& operator=(double x) {
        mpfr_set_d(v_, x, MPFR_RNDN);
        return *this;
    }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    mp_real& operator+=(const mp_real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    mp_real& operator-=(const mp_real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    mp_real& operator*=(const mp_real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    mp_real& operator/=(const mp_real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend mp_real operator+(mp_real a, const mp_real& b) { a += b; return a; }
    friend mp_real operator-(mp_real a, const mp_real& b) { a -= b; return a; }
    friend mp_real operator*(mp_real a, const mp_real& b) { a *= b; return a; }
    friend mp_real operator/(mp_real a, const mp_real& b) { a /= b; return a; }

    friend mp_real operator-(mp_real a) {
        mpfr_neg(a.v_, a.v_, MPFR_RNDN);
        return a;
    }

    friend bool operator<(const mp_real& a, const mp_real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const mp_real& a, const mp_real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const mp_real& a, const mp_real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const mp_real& a, const mp_real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend mp_real abs(mp_real a) {
        mpfr_abs(a.v_, a.v_, MPFR_RNDN);
        return a;
    }
    friend mp_real sqrt(mp_real a) {
        mpfr_sqrt(a.v_, a.v_, MPFR_RNDN);
        return a;
    }
    friend mp_real exp(mp_real a) {
        mpfr_exp(a.v_, a.v_, MPFR_RNDN);
        return a;
    }
    friend mp_real pow(mp_real base, const mp_real& e) {
        mpfr_pow(base.v_, base.v_, e.v_, MPFR_RNDN);
        return base;
    }
    friend mp_real gamma(mp_real a) {
        mpfr_gamma(a.v_, a.v_, MPFR_RNDN);
        return a;
    }

    static mp_real pi() {
        mp_real r;
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    // Relative rounding unit of the working precision, with slack for a few
    // hundred accumulated operations.
    static double epsilon() { return 1.3e-56; }

  private:
    mpfr_t v_;
};

} // namespace rootwell

#endif
