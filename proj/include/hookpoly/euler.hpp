#pragma once
// Euler function (a; a)_inf = prod_{k>=1} (1 - a^k) on |a| < 1, as a ball with
// a certified truncation tail folded into the error radius.

#include "prec.hpp"

namespace hookpoly {

struct EulerOptions {
    double margin = 1e-6;     // reject |a| >= 1 - margin
    long kcap = 2'000'000;    // refuse truncation orders beyond this
};

// tol steers the truncation point (the tail contribution to err); the returned
// ball is rigorous regardless of tol.
Complex euler_inf(const Complex& a, double tol, const EulerOptions& opt = {});

} // namespace hookpoly
