#pragma once
// Multiprecision scaffolding: a thin RAII wrapper over MPFR reals, an
// upward-rounded low-precision magnitude type for rigorous error radii, and a
// ball-style complex number (midpoint pair + error radius).
//
// Error radii are deliberately NOT doubles: intermediate magnitudes in this
// code base reach things like 2^2000, far outside IEEE range. Mag keeps them
// as 32-bit MPFR values always rounded toward +infinity, so every Mag value is
// a certified upper bound.

#include <mpfr.h>
#include <gmpxx.h>
#include <optional>
#include <string>
#include <utility>

#include "errors.hpp"

namespace hookpoly {

using Int = mpz_class;
using Rat = mpq_class;

class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(double x, mpfr_prec_t prec);
    static Real of(long x, mpfr_prec_t prec);
    static Real of(const Int& x, mpfr_prec_t prec);
    static Real of(const Rat& x, mpfr_prec_t prec);
    static Real parse(const std::string& s, mpfr_prec_t prec);
    static Real pi(mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string str(int digits = 0) const;  // 0 = full precision

    friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

    int cmp(double x) const { return mpfr_cmp_d(v_, x); }

    Real abs() const {
        Real r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real exp() const { return un(mpfr_exp, *this); }
    Real log() const { return un(mpfr_log, *this); }
    Real sqrt() const { return un(mpfr_sqrt, *this); }
    Real gamma() const { return un(mpfr_gamma, *this); }
    Real floor() const {
        Real r(prec());
        mpfr_floor(r.raw(), v_);
        return r;
    }
    // a^q for a > 0 via exp(q log a); exact squaring chain when q is integral
    static Real pow_rat(const Real& a, const Rat& q);
    static Real pow_si(const Real& a, long e);
    static void sin_cos(Real& s, Real& c, const Real& x);
    static Real hypot_rnd(const Real& a, const Real& b, mpfr_rnd_t rnd, mpfr_prec_t prec);
    static Real atan2(const Real& y, const Real& x);

  private:
    using BinOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using UnOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
    static Real bin(BinOp op, const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real un(UnOp op, const Real& a) {
        Real r(a.prec());
        op(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

// Nonnegative magnitude with all operations rounded up: a certified upper
// bound through any chain of add/mul/exp/... calls. 32 bits of mantissa is
// plenty for an error radius; the MPFR exponent range covers 2^±(2^62).
class Mag {
  public:
    static constexpr mpfr_prec_t kPrec = 32;
    Mag() {
        mpfr_init2(v_, kPrec);
        mpfr_set_zero(v_, 1);
    }
    Mag(const Mag& o) {
        mpfr_init2(v_, kPrec);
        mpfr_set(v_, o.v_, MPFR_RNDU);
    }
    Mag(Mag&& o) noexcept {
        mpfr_init2(v_, kPrec);
        mpfr_swap(v_, o.v_);
    }
    Mag& operator=(const Mag& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDU);
        return *this;
    }
    Mag& operator=(Mag&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mag() { mpfr_clear(v_); }

    static Mag zero() { return Mag(); }
    static Mag of_ui(unsigned long x);
    static Mag of_d(double x);           // |x| rounded up
    static Mag abs_of(const Real& x);    // |x| rounded up
    static Mag ulp_of(const Real& x);    // upper bound on 1 ulp of x at its precision
    static Mag from_int(const Int& x);   // |x| rounded up
    static Mag from_rat(const Rat& x);   // |x| rounded up
    static Mag hypot_up(const Real& x, const Real& y);

    bool is_zero() const { return mpfr_zero_p(v_); }
    double to_double_up() const { return mpfr_get_d(v_, MPFR_RNDU); }
    std::string str() const;
    // conversion to a Real upper bound (for midpoint +/- radius arithmetic)
    Real to_real(mpfr_prec_t prec) const;

    friend Mag operator+(const Mag& a, const Mag& b) {
        Mag r;
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDU);
        return r;
    }
    friend Mag operator*(const Mag& a, const Mag& b) {
        Mag r;
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDU);
        return r;
    }
    Mag& operator+=(const Mag& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDU);
        return *this;
    }
    // *this * 2^e
    Mag mul_2si(long e) const {
        Mag r;
        mpfr_mul_2si(r.v_, v_, e, MPFR_RNDU);
        return r;
    }
    // upper bound on *this / low, where low is a (positive) lower bound
    Mag div_low(const Real& low) const {
        Mag r;
        mpfr_div(r.v_, v_, low.raw(), MPFR_RNDU);
        return r;
    }
    static Mag max(const Mag& a, const Mag& b) {
        Mag r;
        mpfr_max(r.v_, a.v_, b.v_, MPFR_RNDU);
        return r;
    }
    Mag expm1_up() const {  // upper bound on e^x - 1
        Mag r;
        mpfr_expm1(r.v_, v_, MPFR_RNDU);
        return r;
    }
    Mag exp_up() const {
        Mag r;
        mpfr_exp(r.v_, v_, MPFR_RNDU);
        return r;
    }
    Mag pow_ui_up(unsigned long k) const {
        Mag r;
        mpfr_pow_ui(r.v_, v_, k, MPFR_RNDU);
        return r;
    }
    bool below(double x) const { return mpfr_cmp_d(v_, x) < 0; }
    friend bool operator<(const Mag& a, const Mag& b) { return mpfr_less_p(a.v_, b.v_); }

  private:
    mpfr_t v_;
};

// Complex ball: exact value guaranteed within distance err of (re, im).
class Complex {
  public:
    Real re, im;
    Mag err;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(Real r, Real i, Mag e) : re(std::move(r)), im(std::move(i)), err(std::move(e)) {}

    static Complex zero(mpfr_prec_t prec) { return Complex(prec); }
    static Complex one(mpfr_prec_t prec);
    static Complex of(const Rat& re, const Rat& im, mpfr_prec_t prec);
    static Complex of_int(const Int& x, mpfr_prec_t prec);
    static Complex of_real(Real x) { return Complex(std::move(x), Real(x.prec())); }
    // e^(2*pi*i * num/den), num reduced mod den; rigorous err bound included
    static Complex cis_2pi(const Int& num, const Int& den, mpfr_prec_t prec);
    // e^(i*pi*q)
    static Complex cis_pi(const Rat& q, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return re.prec(); }
    bool is_exact_zero() const { return re.is_zero() && im.is_zero() && err.is_zero(); }

    Complex conj() const {
        Complex r(*this);
        mpfr_neg(r.im.raw(), r.im.raw(), MPFR_RNDN);
        return r;
    }
    Complex neg() const {
        Complex r(*this);
        mpfr_neg(r.re.raw(), r.re.raw(), MPFR_RNDN);
        mpfr_neg(r.im.raw(), r.im.raw(), MPFR_RNDN);
        return r;
    }

    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Complex& b);

    Complex add_int(const Int& c) const;    // exact shift of the midpoint
    Complex mul_int(const Int& c) const;    // exact scale (err scales too)
    Complex mul_real(const Real& c) const;

    // midpoint modulus (round-to-nearest, for reporting; err still applies)
    Real modulus() const;
    // certified bounds on |value| over the whole ball
    Mag abs_upper() const;
    Real abs_lower() const;  // clamped at 0

    Complex inv() const;
    Complex exp() const;
    Complex log() const;  // principal branch; throws if the ball meets the cut
    Complex pow_int(long e) const;
    Complex pow_rat(const Rat& q) const;  // principal branch via exp(q log z)

    std::string str() const;

  private:
    void bump(mpfr_prec_t p);  // absorb midpoint rounding into err
};

// Startup/retry helper: doubles precision until fn reports success or the cap
// is exceeded. fn(prec) returns std::optional<T>.
template <typename F>
auto with_precision_escalation(mpfr_prec_t start, mpfr_prec_t cap, F&& fn)
    -> decltype(fn(start).value()) {
    for (mpfr_prec_t p = start; p <= cap; p *= 2) {
        auto r = fn(p);
        if (r.has_value()) return std::move(r.value());
    }
    throw convergence_error("precision escalation exhausted (cap " + std::to_string(cap) +
                            " bits)");
}

} // namespace hookpoly
