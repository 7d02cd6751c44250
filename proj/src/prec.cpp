#include "hookpoly/prec.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hookpoly {

// ---------------------------------------------------------------- Real

Real Real::of(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of(const Int& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::of(const Rat& x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("cannot parse real number: '" + s + "'");
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const {
    if (digits <= 0) digits = static_cast<int>(prec() * 0.30103) + 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", digits - 1, v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real Real::pow_rat(const Real& a, const Rat& q) {
    if (a.sign() < 0) throw domain_error("pow_rat: negative base");
    if (q.get_den() == 1) {
        Real r(a.prec());
        mpfr_pow_z(r.v_, a.v_, q.get_num().get_mpz_t(), MPFR_RNDN);
        return r;
    }
    return (Real::of(q, a.prec()) * a.log()).exp();
}

Real Real::pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
}

void Real::sin_cos(Real& s, Real& c, const Real& x) {
    mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
}

Real Real::hypot_rnd(const Real& a, const Real& b, mpfr_rnd_t rnd, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_hypot(r.v_, a.v_, b.v_, rnd);
    return r;
}

Real Real::atan2(const Real& y, const Real& x) {
    Real r(std::max(y.prec(), x.prec()));
    mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
    return r;
}

// ---------------------------------------------------------------- Mag

Mag Mag::of_ui(unsigned long x) {
    Mag r;
    mpfr_set_ui(r.v_, x, MPFR_RNDU);
    return r;
}

Mag Mag::of_d(double x) {
    Mag r;
    mpfr_set_d(r.v_, std::fabs(x), MPFR_RNDU);
    return r;
}

Mag Mag::abs_of(const Real& x) {
    Mag r;
    mpfr_abs(r.v_, x.raw(), MPFR_RNDU);
    return r;
}

Mag Mag::ulp_of(const Real& x) {
    return abs_of(x).mul_2si(1 - static_cast<long>(x.prec()));
}

Mag Mag::from_int(const Int& x) {
    Int a = ::abs(x);
    Mag r;
    mpfr_set_z(r.v_, a.get_mpz_t(), MPFR_RNDU);
    return r;
}

Mag Mag::from_rat(const Rat& x) {
    Rat a = ::abs(x);
    Mag r;
    mpfr_set_q(r.v_, a.get_mpq_t(), MPFR_RNDU);
    return r;
}

Mag Mag::hypot_up(const Real& x, const Real& y) {
    Mag r;
    mpfr_hypot(r.v_, x.raw(), y.raw(), MPFR_RNDU);
    return r;
}

Real Mag::to_real(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.raw(), v_, MPFR_RNDU);
    return r;
}

std::string Mag::str() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.3Re", v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

// ---------------------------------------------------------------- Complex

void Complex::bump(mpfr_prec_t p) {
    // absorb the rounding of the just-computed midpoints: a few ulps per component
    err += (Mag::abs_of(re) + Mag::abs_of(im)).mul_2si(2 - static_cast<long>(p));
}

Complex Complex::one(mpfr_prec_t prec) {
    Complex r(prec);
    mpfr_set_ui(r.re.raw(), 1, MPFR_RNDN);
    return r;
}

Complex Complex::of(const Rat& re, const Rat& im, mpfr_prec_t prec) {
    Complex r(Real::of(re, prec), Real::of(im, prec));
    r.err = Mag::ulp_of(r.re) + Mag::ulp_of(r.im);
    return r;
}

Complex Complex::of_int(const Int& x, mpfr_prec_t prec) {
    Complex r(Real::of(x, prec), Real(prec));
    r.err = Mag::ulp_of(r.re);
    return r;
}

Complex operator+(const Complex& a, const Complex& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Complex r(a.re + b.re, a.im + b.im);
    r.err = a.err + b.err;
    r.bump(p);
    return r;
}

Complex operator-(const Complex& a, const Complex& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Complex r(a.re - b.re, a.im - b.im);
    r.err = a.err + b.err;
    r.bump(p);
    return r;
}

Complex operator*(const Complex& a, const Complex& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real ac = a.re * b.re, bd = a.im * b.im;
    Real ad = a.re * b.im, bc = a.im * b.re;
    Complex r(ac - bd, ad + bc);
    Mag am = Mag::hypot_up(a.re, a.im), bm = Mag::hypot_up(b.re, b.im);
    r.err = am * b.err + bm * a.err + a.err * b.err;
    // products can cancel in the midpoint, so the rounding bound must use the
    // product scale |a||b|, not the (possibly tiny) result scale
    r.err += (am * bm).mul_2si(4 - static_cast<long>(p));
    return r;
}

Complex operator/(const Complex& a, const Complex& b) {
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Real low = b.abs_lower();
    if (!(low.sign() > 0))
        throw convergence_error("complex division by a ball containing zero");
    mpfr_prec_t wp = p + 16;
    Real den(wp), t1(wp), t2(wp), nre(wp), nim(wp);
    mpfr_fmma(den.raw(), b.re.raw(), b.re.raw(), b.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_fmma(nre.raw(), a.re.raw(), b.re.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_fmms(nim.raw(), a.im.raw(), b.re.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
    Complex r{Real(p), Real(p)};
    mpfr_div(r.re.raw(), nre.raw(), den.raw(), MPFR_RNDN);
    mpfr_div(r.im.raw(), nim.raw(), den.raw(), MPFR_RNDN);
    Mag au = Mag::hypot_up(a.re, a.im) + a.err;
    Mag cu = au.div_low(low);  // upper bound on |a/b| over the balls
    r.err = (a.err + cu * b.err).div_low(low);
    r.err += cu.mul_2si(5 - static_cast<long>(p));
    return r;
}

Complex Complex::add_int(const Int& c) const {
    Complex r(*this);
    mpfr_add_z(r.re.raw(), re.raw(), c.get_mpz_t(), MPFR_RNDN);
    r.bump(prec());
    return r;
}

Complex Complex::mul_int(const Int& c) const {
    Complex r(prec());
    mpfr_mul_z(r.re.raw(), re.raw(), c.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_z(r.im.raw(), im.raw(), c.get_mpz_t(), MPFR_RNDN);
    r.err = err * Mag::from_int(c);
    r.bump(prec());
    return r;
}

Complex Complex::mul_real(const Real& c) const {
    Complex r(re * c, im * c);
    r.err = err * Mag::abs_of(c);
    r.bump(std::max(prec(), c.prec()));
    return r;
}

Real Complex::modulus() const { return Real::hypot_rnd(re, im, MPFR_RNDN, prec()); }

Mag Complex::abs_upper() const { return Mag::hypot_up(re, im) + err; }

Real Complex::abs_lower() const {
    Real h = Real::hypot_rnd(re, im, MPFR_RNDD, 64);
    Real e = err.to_real(64);
    Real d(64);
    mpfr_sub(d.raw(), h.raw(), e.raw(), MPFR_RNDD);
    if (d.sign() < 0) mpfr_set_zero(d.raw(), 1);
    return d;
}

Complex Complex::inv() const { return one(prec()) / *this; }

Complex Complex::exp() const {
    mpfr_prec_t p = prec();
    Real er = re.exp();
    Real s(p), c(p);
    Real::sin_cos(s, c, im);
    Complex r(er * c, er * s);
    // |e^z| over the ball is at most e^(re + err)
    Real reup(64);
    mpfr_add(reup.raw(), re.raw(), err.to_real(64).raw(), MPFR_RNDU);
    Mag magup;
    {
        Real t(64);
        mpfr_exp(t.raw(), reup.raw(), MPFR_RNDU);
        magup = Mag::abs_of(t);
    }
    r.err = magup * err.expm1_up();
    r.err += magup.mul_2si(3 - static_cast<long>(p));
    return r;
}

Complex Complex::log() const {
    mpfr_prec_t p = prec();
    if (im.is_zero() && re.sign() < 0) {
        // midpoint exactly on the cut: the enclosed quantity is a real
        // interval, so extend by the limit from above (arg == pi)
        Real low = abs_lower();
        if (!(low.sign() > 0))
            throw domain_error("complex log: ball touches the branch cut or origin");
        Real mod(p);
        mpfr_abs(mod.raw(), re.raw(), MPFR_RNDN);
        Complex r(mod.log(), Real::pi(p));
        r.err = err.div_low(low);
        r.err += (Mag::hypot_up(r.re, r.im) + Mag::of_ui(4)).mul_2si(2 - static_cast<long>(p));
        return r;
    }
    // reject balls meeting the branch cut (-inf, 0] -- includes balls around 0
    Real d(64);
    if (re.sign() <= 0)
        mpfr_abs(d.raw(), im.raw(), MPFR_RNDD);
    else
        mpfr_hypot(d.raw(), re.raw(), im.raw(), MPFR_RNDD);
    if (!(d > err.to_real(64)))
        throw domain_error("complex log: ball touches the branch cut or origin");
    Real low = abs_lower();
    Real mod = Real::hypot_rnd(re, im, MPFR_RNDN, p);
    Complex r(mod.log(), Real::atan2(im, re));
    r.err = err.div_low(low);
    r.err += (Mag::hypot_up(r.re, r.im) + Mag::of_ui(4)).mul_2si(2 - static_cast<long>(p));
    return r;
}

Complex Complex::pow_int(long e) const {
    mpfr_prec_t p = prec();
    if (e == 0) return one(p);
    if (e < 0) return inv().pow_int(-e);
    Complex base(*this), acc = one(p);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        if (k >>= 1) base = base * base;
    }
    return acc;
}

Complex Complex::pow_rat(const Rat& q) const {
    if (q == 0) return one(prec());
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return pow_int(q.get_num().get_si());
    Complex l = log();
    Complex scaled(prec());
    mpfr_mul_q(scaled.re.raw(), l.re.raw(), q.get_mpq_t(), MPFR_RNDN);
    mpfr_mul_q(scaled.im.raw(), l.im.raw(), q.get_mpq_t(), MPFR_RNDN);
    scaled.err = l.err * Mag::from_rat(q);
    scaled.bump(prec());
    return scaled.exp();
}

Complex Complex::cis_2pi(const Int& num, const Int& den, mpfr_prec_t prec) {
    if (den == 0) throw domain_error("cis_2pi: zero denominator");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());  // r in [0, |den|)
    mpfr_prec_t wp = prec + 16;
    Real x = Real::pi(wp) * Real::of(Rat(2 * r, den), wp);
    Real s(prec), c(prec);
    Real::sin_cos(s, c, x);
    Complex out(std::move(c), std::move(s));
    out.err = Mag::of_ui(1).mul_2si(3 - static_cast<long>(prec));
    return out;
}

Complex Complex::cis_pi(const Rat& q, mpfr_prec_t prec) {
    // reduce q mod 2 exactly, then evaluate e^(i pi q)
    Rat qr = q;
    Int twice_floor;
    {
        Rat half = qr / 2;
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
        qr -= Rat(2) * Rat(fl);
    }
    mpfr_prec_t wp = prec + 16;
    Real x = Real::pi(wp) * Real::of(qr, wp);
    Real s(prec), c(prec);
    Real::sin_cos(s, c, x);
    Complex out(std::move(c), std::move(s));
    out.err = Mag::of_ui(1).mul_2si(3 - static_cast<long>(prec));
    return out;
}

std::string Complex::str() const {
    return re.str() + (im.sign() < 0 ? " - " : " + ") + im.abs().str() + "i  (err " + err.str() +
           ")";
}

} // namespace hookpoly
