#pragma once
// The lattice theta function attached to a residue class ell mod t, in its
// three equivalent forms:
//
//   (1) lattice sum over m in Z^t with 1.m = 0 and b.m = ell (mod t),
//       b = (0, 1, ..., t-1), of z^{||m||^2/2 + b.m/t};
//   (2) (z)_inf^t * sum_{m >= 0, m = ell (t)} p(m) z^{m/t};
//   (3) (1/t) sum_{j<t} e^{-2 pi i j ell / t} (z)_inf^t / (z^{1/t} e^{2 pi i j/t})_inf.
//
// All exponents use the principal branch of z^{1/t}, so the three forms agree
// on the slit disc. Every evaluation returns a ball whose err includes the
// truncation tail.
//
// Form (1) is backed by a per-t cache of integer point counts bucketed by
// exponent: one pruned enumeration serves every ell, z and precision. Counts
// are provably exact for bucket indices j <= R^2/2 - beta R - ell/t (a point
// outside the enumeration radius cannot produce a smaller exponent), and the
// evaluator never reads past that.

#include <vector>

#include "prec.hpp"

namespace hookpoly {

struct ThetaSpec {
    unsigned t = 1;
    unsigned ell = 0;  // 0 <= ell < t
};

enum class ThetaForm { lattice, partition, roots_of_unity };

struct ThetaOptions {
    long long lattice_budget = 300'000'000;  // max enumerated lattice points
    long series_cap = 2'000'000;             // max series terms (form 2/3 helpers)
};

Complex theta_lattice(const ThetaSpec& spec, const Complex& z, double tol,
                      const ThetaOptions& opt = {});
Complex theta_partition(const ThetaSpec& spec, const Complex& z, double tol,
                        const ThetaOptions& opt = {});
Complex theta_roots_of_unity(const ThetaSpec& spec, const Complex& z, double tol,
                             const ThetaOptions& opt = {});
Complex theta_eval(const ThetaSpec& spec, const Complex& z, double tol, ThetaForm form,
                   const ThetaOptions& opt = {});

// The analytic series S(z) = sum_{i>=0} p(ell + t i) z^i and its derivative.
// Theta(z) = (z)_inf^t z^{ell/t} S(z), and (z)_inf never vanishes on |z| < 1,
// so zeros of Theta in the punctured disc are exactly zeros of S. The zero
// search works on S.
Complex theta_series_core(const ThetaSpec& spec, const Complex& z, double tol,
                          const ThetaOptions& opt = {});
Complex theta_series_core_deriv(const ThetaSpec& spec, const Complex& z, double tol,
                                const ThetaOptions& opt = {});

// exact point-count table for one residue class (exposed for the identity
// tests: lattice counts must reproduce the (z)_inf^{-t}-convolution integers)
std::vector<long long> lattice_bucket_counts(unsigned t, unsigned ell, long jmax,
                                             const ThetaOptions& opt = {});

} // namespace hookpoly
