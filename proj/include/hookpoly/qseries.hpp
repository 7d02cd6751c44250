#pragma once
// Truncated q-series with WPoly coefficients on a rational exponent grid:
// stored index e represents q^(e/delta). Product expansions for the three
// statistic families live here:
//
//   hook polynomials  P_t(w,n):  prod 1/(1-(w q^t)^m)^t * prod (1-q^{tm})^t/(1-q^m)
//   parts polynomials Q_n(w):    prod 1/(1-w q^m)
//   t-core counts     c_t(n):    prod (1-q^{tm})^t/(1-q^m)
//   deformations      p_{a,b}:   sum_m q^{a m^2 + b m} w^m / (q;q)_m
//
// All coefficient arithmetic is exact.

#include <map>
#include <vector>

#include "wpoly.hpp"

namespace hookpoly {

class QSeries {
  public:
    // grid denominator delta >= 1; keeps exponents e/delta for 0 <= e <= emax
    QSeries(long delta, long emax);

    static QSeries unit(long delta, long emax);  // the series 1

    long delta() const { return delta_; }
    long emax() const { return emax_; }

    // coefficient of q^(e/delta); throws grid_error off-grid or beyond emax
    const WPoly& at_index(long e) const;
    const WPoly& at_rat(const Rat& n) const;
    WPoly& mutable_at(long e);

    // multiply in place by (1 + c w^d q^e)^sign, sign in {+1,-1};
    // e is rational and must be positive and on the grid
    void mul_factor(const Int& c, const Rat& e, unsigned d, int sign);

  private:
    long delta_;
    long emax_;
    std::vector<WPoly> c_;
};

// P_t(w, n) for n = 0..N (index = n). t >= 1.
std::vector<WPoly> expand_Ht(unsigned t, unsigned N);

// Q_n(w) for n = 0..N (index = n).
std::vector<WPoly> expand_Qn(unsigned N);

// c_t(n) for n = 0..N (index = n); w-free scalar expansion.
std::vector<Int> expand_tcore(unsigned t, unsigned N);

// Rogers–Ramanujan style deformation on the grid with denominator
// delta = lcm(den(a), den(b)).
struct PabExpansion {
    Rat a, b;
    long delta = 1;
    long emax = 0;                 // grid indices run 0..emax (n = e/delta)
    std::map<long, WPoly> polys;   // only nonzero polynomials stored

    // polynomial at rational n: zero polynomial for on-grid empty slots,
    // grid_error for off-grid n or n beyond the expansion range
    const WPoly& at(const Rat& n) const;
};

// a > 0 required. mcap bounds the summation index m (resource_limit_error if
// the natural stopping point exceeds it).
PabExpansion expand_pab(const Rat& a, const Rat& b, const Rat& nmax, unsigned mcap = 100000);

} // namespace hookpoly
