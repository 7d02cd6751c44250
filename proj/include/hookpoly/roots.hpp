#pragma once
// Simultaneous polynomial root finding (Ehrlich–Aberth) over exact integer
// coefficients, with a posteriori certification: every returned root carries
// an error radius from the classical Weierstrass inclusion disks
//
//   all zeros of p lie in the union of disks D(z_i, d·|W_i|),
//   W_i = p(z_i) / (lead · prod_{j != i} (z_i - z_j)),
//
// and pairwise-disjoint disks each contain exactly one zero. |p(z_i)| is
// evaluated by ball Horner on the exact coefficients, so the radii are
// rigorous, not heuristic.

#include <vector>

#include "prec.hpp"
#include "wpoly.hpp"

namespace hookpoly {

struct RootOptions {
    mpfr_prec_t start_prec = 256;
    mpfr_prec_t max_prec = 8192;      // escalation cap (convergence_error beyond)
    int max_iter = 400;               // Aberth sweeps per precision level
    double target_resid = 1e-30;      // accept when |p(r)| <= target * sum|c_k||r|^k
};

struct CertifiedRoots {
    // every root of the input, zeros at the origin first (exact, err = 0),
    // the rest sorted by (modulus, argument); err = certified inclusion radius
    std::vector<Complex> roots;
    // relative residual |p(r)| / sum_k |c_k||r|^k per root, aligned with roots
    // (exact 0 for the stripped origin zeros)
    std::vector<double> residuals;
    unsigned zeros_at_origin = 0;
    // false when some inclusion disks overlap: enclosures are then component
    // diameters (still sound, but roots within a cluster are not individually
    // separated)
    bool disks_disjoint = true;
    mpfr_prec_t final_prec = 0;
};

CertifiedRoots solve_roots(const WPoly& poly, const RootOptions& opt = {});
CertifiedRoots solve_roots(const std::vector<Int>& coeffs, const RootOptions& opt = {});

// 1 + max_k |c_k / c_deg|, an upper bound on every root's modulus
Real cauchy_bound(const WPoly& poly);

// Certification helpers used by the solver-invariant tests: both return the
// worst relative deviation seen, where "relative" is measured against the
// natural scale of the compared quantity (sum of |terms|, or the largest
// input coefficient), so cancellation-heavy cases are judged fairly.
double vieta_max_rel_dev(const std::vector<Int>& coeffs, const CertifiedRoots& r);
double reconstruct_max_rel_dev(const std::vector<Int>& coeffs, const CertifiedRoots& r);

} // namespace hookpoly
