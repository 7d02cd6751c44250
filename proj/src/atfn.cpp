#include "hookpoly/atfn.hpp"

#include <cmath>
#include <numeric>

#include "hookpoly/dedekind.hpp"
#include "hookpoly/errors.hpp"
#include "hookpoly/euler.hpp"

namespace hookpoly {

namespace {

void validate(unsigned t, const Complex& w, const AtOptions& opt) {
    if (t < 6) throw domain_error("eval_At: t must be >= 6 (tail bound diverges below)");
    if (w.abs_lower().cmp(opt.w0 * (1 + 1e-12)) > 0)
        throw domain_error("eval_At: |w| exceeds the configured bound w0 = " +
                           std::to_string(opt.w0));
}

// upper bound on C = (|w|)_inf^{-t}
Mag leading_bound(unsigned t, const Complex& w) {
    if (w.is_exact_zero()) return Mag::of_ui(1);
    Real sig_up = w.abs_upper().to_real(64);
    Complex sig(Real(sig_up), Real(mpfr_prec_t(64)));
    Complex E = euler_inf(sig, 1e-12);
    Real low = E.abs_lower();
    if (!(low.sign() > 0)) throw convergence_error("eval_At: Euler lower bound degenerate");
    return Mag::of_ui(1).div_low(low).pow_ui_up(t);
}

} // namespace

Mag At_tail_bound(unsigned t, const Complex& w, long K) {
    if (t < 6) throw domain_error("At_tail_bound: t must be >= 6");
    if (K < 1) throw domain_error("At_tail_bound: K must be >= 1");
    Mag C = leading_bound(t, w);
    // K^{-(t-5)/2} rounded up: negative exponent times a lower bound on log K
    Real lk(64);
    mpfr_set_si(lk.raw(), K, MPFR_RNDD);
    mpfr_log(lk.raw(), lk.raw(), MPFR_RNDD);
    Real e(64);
    mpfr_mul_si(e.raw(), lk.raw(), 5 - static_cast<long>(t), MPFR_RNDU);
    mpfr_div_ui(e.raw(), e.raw(), 2, MPFR_RNDU);
    mpfr_exp(e.raw(), e.raw(), MPFR_RNDU);
    Real f(64);
    mpfr_set_ui(f.raw(), 2, MPFR_RNDU);
    mpfr_div_ui(f.raw(), f.raw(), t - 5, MPFR_RNDU);
    return C * Mag::abs_of(e) * Mag::abs_of(f);
}

long At_required_K(unsigned t, const Complex& w, double tol, const AtOptions& opt) {
    if (t < 6) throw domain_error("At_required_K: t must be >= 6");
    if (!(tol > 0)) throw domain_error("At_required_K: tol must be positive");
    double lnC = std::log(leading_bound(t, w).to_double_up());
    double lnK =
        (std::log(2.0) + lnC - std::log(static_cast<double>(t - 5)) - std::log(tol)) * 2.0 /
        (t - 5);
    if (lnK > std::log(static_cast<double>(opt.kcap))) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.4g, beyond cap %ld (tol = %.1e)",
                      lnK / std::log(10.0), opt.kcap, tol);
        throw resource_limit_error("eval_At: tail bound needs K ~ 10^" + std::string(buf));
    }
    long K = static_cast<long>(std::ceil(std::exp(lnK))) + 1;
    // nudge upward until the certified bound agrees (the double estimate above
    // ignores directed rounding)
    for (int i = 0; i < 64 && !At_tail_bound(t, w, K).below(tol); ++i) K += K / 8 + 1;
    if (K > opt.kcap)
        throw resource_limit_error("eval_At: certified K exceeds cap " +
                                   std::to_string(opt.kcap));
    return K;
}

std::vector<Complex> eval_At_truncated(unsigned t, const Complex& w, const std::vector<long>& ns,
                                       long K, mpfr_prec_t prec, const AtOptions& opt) {
    validate(t, w, opt);
    for (long n : ns)
        if (n < 0) throw domain_error("eval_At: n must be >= 0");

    std::vector<Complex> acc(ns.size(), Complex(prec));
    const bool have_w = !w.is_exact_zero();
    std::vector<Complex> tab;
    Rat kexp(1 - static_cast<long>(t), 2);
    kexp.canonicalize();

    for (long k = 1; k <= K; ++k) {
        if (std::gcd(k, static_cast<long>(t)) != 1) continue;
        Real kfac = Real::pow_rat(Real::of(k, prec), kexp);
        // powers of the k-th root of unity
        tab.assign(1, Complex::one(prec));
        if (k > 1) {
            Complex zeta = Complex::cis_2pi(Int(1), Int(k), prec);
            tab.reserve(static_cast<size_t>(k));
            for (long j = 1; j < k; ++j) tab.push_back(tab.back() * zeta);
        }
        long h_lo = (k == 1) ? 0 : 1;
        long h_hi = (k == 1) ? 0 : k - 1;
        for (long h = h_lo; h <= h_hi; ++h) {
            if (k > 1 && std::gcd(h, k) != 1) continue;
            Complex base =
                Complex::cis_pi(omega_prime_phase(Int(h), Int(k), t), prec).mul_real(kfac);
            if (have_w) {
                long ei = (h * static_cast<long>(t)) % k;
                Complex arg = w * tab[static_cast<size_t>(ei)];
                base = base * euler_inf(arg, opt.euler_tol).pow_int(-static_cast<long>(t));
            }
            for (size_t i = 0; i < ns.size(); ++i) {
                long idx = static_cast<long>((static_cast<unsigned long>(ns[i] % k) *
                                              static_cast<unsigned long>(h)) %
                                             static_cast<unsigned long>(k));
                acc[i] = acc[i] + base * tab[static_cast<size_t>(idx)].conj();
            }
        }
    }

    Mag tail = At_tail_bound(t, w, K);
    for (auto& v : acc) v.err += tail;
    return acc;
}

std::vector<Complex> eval_At_batch(unsigned t, const Complex& w, const std::vector<long>& ns,
                                   double tol, mpfr_prec_t prec, const AtOptions& opt) {
    validate(t, w, opt);
    long K = At_required_K(t, w, tol, opt);
    return eval_At_truncated(t, w, ns, K, prec, opt);
}

Complex eval_At(unsigned t, const Complex& w, long n, double tol, mpfr_prec_t prec,
                const AtOptions& opt) {
    return eval_At_batch(t, w, {n}, tol, prec, opt)[0];
}

} // namespace hookpoly
