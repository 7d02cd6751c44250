#include "hookpoly/dedekind.hpp"

#include "hookpoly/errors.hpp"

namespace hookpoly {

Rat dedekind_sum(const Int& h_in, const Int& k_in) {
    if (k_in < 1) throw domain_error("dedekind_sum: k must be >= 1");
    Int h;
    mpz_fdiv_r(h.get_mpz_t(), h_in.get_mpz_t(), k_in.get_mpz_t());
    Int k = k_in;
    Int g;
    mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
    if (k > 1 && g != 1) throw domain_error("dedekind_sum: gcd(h, k) must be 1");

    // reciprocity: s(h,k) + s(k,h) = -1/4 + (h^2 + k^2 + 1)/(12 h k)
    Rat s = 0;
    int sign = 1;
    while (h > 0) {
        Rat num(h * h + k * k + 1);
        Rat term = Rat(-1, 4) + num / (Rat(12) * Rat(h) * Rat(k));
        term.canonicalize();
        if (sign > 0)
            s += term;
        else
            s -= term;
        sign = -sign;
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), k.get_mpz_t(), h.get_mpz_t());
        k = h;
        h = r;
    }
    // chain ends at s(0, 1) = 0
    return s;
}

Complex omega(const Int& h, const Int& k, mpfr_prec_t prec) {
    return Complex::cis_pi(dedekind_sum(h, k), prec);
}

Rat omega_prime_phase(const Int& h, const Int& k, unsigned t) {
    if (t == 0) throw domain_error("omega_prime: t must be >= 1");
    Int g;
    Int tz(static_cast<long>(t));
    mpz_gcd(g.get_mpz_t(), tz.get_mpz_t(), k.get_mpz_t());
    Int k2 = k / g;
    Int h2;
    Int th = tz / g * h;
    mpz_fdiv_r(h2.get_mpz_t(), th.get_mpz_t(), k2.get_mpz_t());
    return dedekind_sum(h, k) - Rat(tz) * dedekind_sum(h2, k2);
}

Complex omega_prime(const Int& h, const Int& k, unsigned t, mpfr_prec_t prec) {
    return Complex::cis_pi(omega_prime_phase(h, k, t), prec);
}

} // namespace hookpoly
