#include "hookpoly/euler.hpp"

#include <cmath>

#include "hookpoly/errors.hpp"

namespace hookpoly {

Complex euler_inf(const Complex& a, double tol, const EulerOptions& opt) {
    if (!(tol > 0)) throw domain_error("euler_inf: tol must be positive");
    mpfr_prec_t p = a.prec();
    if (a.is_exact_zero()) return Complex::one(p);

    Mag sig_mag = a.abs_upper();
    double sig = sig_mag.to_double_up();
    if (!(sig < 1.0 - opt.margin))
        throw domain_error("euler_inf: |a| = " + std::to_string(sig) +
                           " too close to 1 (margin " + std::to_string(opt.margin) + ")");

    // pick K so that sum_{k>K} |a|^k / (1 - |a|^k) <= tol; geometric estimate first
    double lg = std::log(sig);
    long K = static_cast<long>(std::ceil(std::log(tol * (1.0 - sig) * 0.5) / lg)) + 2;
    if (K < 4) K = 4;
    if (K > opt.kcap)
        throw resource_limit_error("euler_inf: truncation order " + std::to_string(K) +
                                   " exceeds cap " + std::to_string(opt.kcap));

    Complex prod = Complex::one(p);
    Complex ak = a;
    const Complex one = Complex::one(p);
    for (long k = 1; k <= K; ++k) {
        prod = prod * (one - ak);
        if (k < K) ak = ak * a;
    }

    // certified tail: log of the dropped factors is bounded by
    // sum_{k>K} |a|^k/(1-|a|^k) <= s^{K+1} / ((1-s)(1-s^{K+1})),  s = |a| upper
    Mag sK1 = sig_mag.pow_ui_up(static_cast<unsigned long>(K) + 1);
    Real one_minus_s(64), one_minus_sK1(64);
    mpfr_ui_sub(one_minus_s.raw(), 1, sig_mag.to_real(64).raw(), MPFR_RNDD);
    mpfr_ui_sub(one_minus_sK1.raw(), 1, sK1.to_real(64).raw(), MPFR_RNDD);
    if (!(one_minus_s.sign() > 0) || !(one_minus_sK1.sign() > 0))
        throw convergence_error("euler_inf: tail bound degenerate");
    Mag tail_log = sK1.div_low(one_minus_s).div_low(one_minus_sK1);
    prod.err += prod.abs_upper() * tail_log.expm1_up();
    return prod;
}

} // namespace hookpoly
