#pragma once
// Zero counting and location for the lattice theta function inside its disc of
// analyticity, by the argument principle. All work happens on the analytic
// core S(z) = sum p(ell + t i) z^i (see theta.hpp): Theta = (z)_inf^t z^{ell/t} S,
// and the first two factors never vanish on the punctured slit disc, so S has
// exactly Theta's zeros there and is single-valued, which a winding integrand
// must be.
//
// Pipeline: adaptive-sampling winding on the circle |z| = 1/(1+eps) (angular
// image steps kept < pi/4, every sample's ball certified away from 0), then
// recursive quadrant subdivision of the enclosing square until each box holds
// one zero, then Newton polishing on the series core. Contours that come too
// close to a zero raise an internal ambiguity and are retried slightly
// perturbed (deterministically).

#include <vector>

#include "prec.hpp"
#include "theta.hpp"

namespace hookpoly {

struct DiscZeroOptions {
    mpfr_prec_t prec = 160;
    double tol = 1e-26;          // series tail target per contour evaluation
    int max_depth = 48;          // subdivision depth cap
    long eval_budget = 6'000'000;
    double isolate_side = 0.02;  // polish once a single-zero box is this small
    int newton_iters = 60;
};

struct DiscZeroReport {
    ThetaSpec spec;
    double radius = 0;  // |z| <= radius actually searched (after perturbation)
    long count = 0;     // winding count on |z| = radius
    // zeros of Theta in 0 < |z| <= radius, sorted by (modulus, argument);
    // err = certified enclosure radius. Invariant: disc_zeros.size() == count.
    std::vector<Complex> disc_zeros;
    // the exceptional w-plane set: reciprocals 1/z of disc_zeros
    std::vector<Complex> zeros;
};

// zeros of Theta_{ell,t} with |z| <= 1/(1+eps)
DiscZeroReport theta_zeros(const ThetaSpec& spec, double eps, const DiscZeroOptions& opt = {});

// winding count of S on |z| = radius; density scales the initial sampling
// (exposed for the count-stability property test)
long theta_circle_winding(const ThetaSpec& spec, double radius, const DiscZeroOptions& opt = {},
                          int density = 1);

} // namespace hookpoly
