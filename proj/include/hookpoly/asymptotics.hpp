#pragma once

// Asymptotic main terms for the hook polynomial families and the comparison /
// classification harnesses built on them.
//
// Two regimes share the stage: for |w| > 1 the polynomials grow like
//
//   e^{pi sqrt(2n/3)} w^{n/t} Theta_{ell,t}(1/w) * t^{(t+2)/2}
//      / (2^{(3t+5)/4} 3^{(t+1)/4} n^{(t+3)/4})
//
// along the residue class n = ell (mod t), and for |w| <= w0 (t >= 6) like
//
//   (2pi)^{(t-1)/2} A_t(w,n) n^{(t-3)/2} / (t^{t/2} Gamma((t-1)/2)).
//
// All ratio comparisons are taken between moduli so the w^{1/t} branch choice
// never enters. t = 1 collapses the large-w term to the Hardy-Ramanujan
// asymptotic times w^n, which doubles as an independent consistency oracle.

#include <vector>

#include "hookpoly/atfn.hpp"
#include "hookpoly/prec.hpp"
#include "hookpoly/roots.hpp"
#include "hookpoly/theta.hpp"
#include "hookpoly/thetazeros.hpp"

namespace hookpoly {

// e^{pi sqrt(2n/3)} / (4 sqrt(3) n)
Real hardy_ramanujan_main(long n, mpfr_prec_t prec = 128);

struct MainTermValue {
    Complex value;         // full main term, principal branch of w^{n/t}
    Real modulus;          // branch-free: assembled from |w| and |Theta| directly
    bool near_theta_zero;  // |Theta_{ell,t}(1/w)| failed to clear 10x its err bound
};

// large-|w| main term; requires |w| > 1 and n = ell (mod t)
MainTermValue main_term_large_w(unsigned t, long ell, long n, const Complex& w,
                                double theta_tol = 1e-20, mpfr_prec_t prec = 192);
// same, with Theta_{ell,t}(1/w) already in hand (it does not depend on n)
MainTermValue main_term_large_w(unsigned t, long ell, long n, const Complex& w,
                                const Complex& theta_at_winv, mpfr_prec_t prec = 192);

// small-|w| main term (t >= 6, |w| <= w0 enforced by the A_t evaluator)
Complex main_term_small_w(unsigned t, long n, const Complex& w, double tol,
                          mpfr_prec_t prec = 192, const AtOptions& opt = {});
// shared-sweep batch over several n (one Farey-denominator pass)
std::vector<Complex> main_term_small_w_batch(unsigned t, const std::vector<long>& ns,
                                             const Complex& w, double tol,
                                             mpfr_prec_t prec = 192, const AtOptions& opt = {});

struct AsymptoticEntry {
    long n;
    Real exact_modulus;  // |P_t(w,n)|
    Real main_modulus;
    Real ratio;          // exact / main
};

struct AsymptoticReport {
    unsigned t = 1;
    long ell = 0;
    Complex w;
    std::vector<AsymptoticEntry> entries;  // sorted by n
};

struct RatioOptions {
    mpfr_prec_t prec = 192;
    double theta_tol = 1e-20;  // large regime
    double at_tol = 1e-10;     // small regime
    AtOptions at;
};

// exact |P_t(w,n)| against the regime's main-term modulus, one entry per n;
// the regime is picked by |w| vs 1, and the large regime insists on
// n = ell (mod t) for every n
AsymptoticReport ratio_report(unsigned t, long ell, const Complex& w, std::vector<long> ns,
                              const RatioOptions& opt = {});

struct LocalizationVerdict {
    long n = 0;
    unsigned t = 1;
    long ell = 0;
    double eps = 0;
    double w0 = 0;
    unsigned zeros_at_origin = 0;
    // these three partition the nonzero roots of P_t(w,n)
    std::vector<Complex> annulus_roots;             // w0 <= |w| <= 1 + eps
    std::vector<Complex> theta_neighborhood_roots;  // within eps of a Z point
    std::vector<Complex> violations;
};

// classify already-solved roots against already-located Z points (the
// reciprocals of theta zeros); annulus membership is tested first
LocalizationVerdict classify_localization(const CertifiedRoots& roots,
                                          const std::vector<Complex>& z_points, unsigned t,
                                          long ell, long n, double eps, double w0);

// end-to-end: expand P_t(w,n), solve it, locate the theta zeros, classify
LocalizationVerdict zero_localization_check(unsigned t, long ell, long n, double eps, double w0,
                                            const DiscZeroOptions& zopt = {},
                                            const RootOptions& ropt = {});

struct RRClaimReport {
    int b = 0;
    long n = 0;
    bool pass = true;      // every root has Re <= tol
    bool trivial = false;  // zero polynomial: no roots at all
    double max_re = 0;     // worst real part (err-inflated); 0 when trivial
    double max_abs_im = 0;
    Complex worst;         // a root attaining max_re
    double vieta_dev = 0;  // solver certification echoes for this polynomial
    double recon_dev = 0;
};

// real-part bound check for one deformed polynomial p_{1,b}(w;n)
RRClaimReport rr_claim_check(int b, long n, double tol, const RootOptions& opt = {});

struct RRScanReport {
    int b = 0;
    long nmax = 0;
    bool pass = true;
    long worst_n = 0;  // n attaining worst_re (0 if every slot was trivial)
    double worst_re = 0;
    double max_abs_im = 0;
    double worst_vieta = 0;
    double worst_recon = 0;
    long solved = 0;  // nonzero polynomials encountered
};

// same check across every n <= nmax, expanding the family once; the per-n
// solves run on `jobs` threads, aggregation stays in n-order
RRScanReport rr_claim_scan(int b, long nmax, double tol, const RootOptions& opt = {},
                           int jobs = 1);

// startup validation of a configured w0: sampled |w| <= w0 and n from ns must
// keep |A_t(w,n)| above 10x its error bound (A_t never vanishes on the disc)
bool validate_w0(unsigned t, double w0, const std::vector<long>& ns, double tol,
                 mpfr_prec_t prec = 192);

} // namespace hookpoly
