#pragma once
// The convergent Kloosterman-type sum
//
//   A_t(w,n) = sum_{k>=1, (k,t)=1} k^{-(t-1)/2} sum_{h mod k, (h,k)=1}
//              e^{-2 pi i h n / k} omega'_{h,k} (w e^{2 pi i h t/k})_inf^{-t}
//
// truncated at k <= K with the trivial tail bound
//   |dropped| <= C sum_{k>K} k^{1-(t-1)/2} <= C (2/(t-5)) K^{-(t-5)/2},
//   C = (|w|)_inf^{-t},
// folded into the error radius. Convergence of that bound needs t >= 6, which
// is enforced as a precondition. A_t(0, n) is the classical t-core A_t(n).

#include <vector>

#include "prec.hpp"

namespace hookpoly {

struct AtOptions {
    long kcap = 200'000;   // refuse truncation orders beyond this
    double w0 = 0.05;      // enforced domain bound on |w|
    double euler_tol = 1e-30;
};

// smallest K making the trivial tail bound <= tol (resource_limit_error if it
// exceeds opt.kcap; the message reports the required K)
long At_required_K(unsigned t, const Complex& w, double tol, const AtOptions& opt = {});

// certified upper bound on the dropped tail for a given K
Mag At_tail_bound(unsigned t, const Complex& w, long K);

// batch evaluation at several n sharing one pass over k (the k-loop dominates)
std::vector<Complex> eval_At_truncated(unsigned t, const Complex& w, const std::vector<long>& ns,
                                       long K, mpfr_prec_t prec, const AtOptions& opt = {});

std::vector<Complex> eval_At_batch(unsigned t, const Complex& w, const std::vector<long>& ns,
                                   double tol, mpfr_prec_t prec, const AtOptions& opt = {});

Complex eval_At(unsigned t, const Complex& w, long n, double tol, mpfr_prec_t prec,
                const AtOptions& opt = {});

} // namespace hookpoly
