#pragma once
// Dedekind sums s(h,k) as exact rationals, and the multiplier-system phases
// built from them. The sum is evaluated through the reciprocity law in
// O(log k) exact steps, Euclid-style; a direct sawtooth-sum oracle lives in
// the tests.

#include "prec.hpp"

namespace hookpoly {

// s(h, k) for k >= 1, gcd(h, k) = 1 (h is reduced mod k internally)
Rat dedekind_sum(const Int& h, const Int& k);

// omega_{h,k} = exp(pi i s(h,k))
Complex omega(const Int& h, const Int& k, mpfr_prec_t prec);

// omega'_{h,k} = omega_{h,k} / omega_{t h/g, k/g}^t with g = gcd(t, k);
// the first index of the denominator is reduced mod k/g
Complex omega_prime(const Int& h, const Int& k, unsigned t, mpfr_prec_t prec);

// exact phase of omega_prime as a rational multiple of pi (handy for tests)
Rat omega_prime_phase(const Int& h, const Int& k, unsigned t);

} // namespace hookpoly
