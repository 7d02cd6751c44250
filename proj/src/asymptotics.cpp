#include "hookpoly/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "hookpoly/errors.hpp"
#include "hookpoly/qseries.hpp"

namespace hookpoly {

namespace {

Rat rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

unsigned norm_residue(long ell, unsigned t) {
    long m = ell % static_cast<long>(t);
    if (m < 0) m += t;
    return static_cast<unsigned>(m);
}

Real at_prec(const Real& x, mpfr_prec_t prec) {
    Real y(prec);
    mpfr_set(y.raw(), x.raw(), MPFR_RNDN);
    return y;
}

Complex at_prec(const Complex& z, mpfr_prec_t prec) {
    Complex w(at_prec(z.re, prec), at_prec(z.im, prec));
    w.err = z.err;
    return w;
}

// e^{pi sqrt(2n/3)} t^{(t+2)/2} / (2^{(3t+5)/4} 3^{(t+1)/4} n^{(t+3)/4})
Real large_w_scalar(unsigned t, long n, mpfr_prec_t prec) {
    long tt = t;
    Real growth = (Real::pi(prec) * (Real::of(2L * n, prec) / Real::of(3L, prec)).sqrt()).exp();
    Real num = Real::pow_rat(Real::of(tt, prec), rat(tt + 2, 2));
    Real den = Real::pow_rat(Real::of(2L, prec), rat(3 * tt + 5, 4)) *
               Real::pow_rat(Real::of(3L, prec), rat(tt + 1, 4)) *
               Real::pow_rat(Real::of(n, prec), rat(tt + 3, 4));
    return growth * num / den;
}

// (2pi)^{(t-1)/2} n^{(t-3)/2} / (t^{t/2} Gamma((t-1)/2))
Real small_w_scalar(unsigned t, long n, mpfr_prec_t prec) {
    long tt = t;
    Real twopi = Real::pi(prec) * Real::of(2L, prec);
    Real num = Real::pow_rat(twopi, rat(tt - 1, 2)) *
               Real::pow_rat(Real::of(n, prec), rat(tt - 3, 2));
    Real den = Real::pow_rat(Real::of(tt, prec), rat(tt, 2)) *
               Real::of(rat(tt - 1, 2), prec).gamma();
    return num / den;
}

} // namespace

Real hardy_ramanujan_main(long n, mpfr_prec_t prec) {
    if (n < 1) throw domain_error("hardy_ramanujan_main: n must be positive");
    Real growth = (Real::pi(prec) * (Real::of(2L * n, prec) / Real::of(3L, prec)).sqrt()).exp();
    return growth / (Real::of(4L * n, prec) * Real::of(3L, prec).sqrt());
}

MainTermValue main_term_large_w(unsigned t, long ell, long n, const Complex& w,
                                const Complex& theta_at_winv, mpfr_prec_t prec) {
    if (t == 0) throw domain_error("main_term_large_w: t must be positive");
    if (n < 1) throw domain_error("main_term_large_w: n must be positive");
    unsigned l = norm_residue(ell, t);
    if (norm_residue(n, t) != l)
        throw domain_error("main_term_large_w: n is not in the residue class ell (mod t)");
    if (!(w.abs_lower().cmp(1.0) > 0))
        throw domain_error("main_term_large_w: requires |w| > 1");

    Real s = large_w_scalar(t, n, prec);
    Rat e = rat(n, t);
    MainTermValue out;
    out.value = (at_prec(w, prec).pow_rat(e) * theta_at_winv).mul_real(s);
    out.modulus = Real::pow_rat(at_prec(w.modulus(), prec), e) * theta_at_winv.modulus() * s;
    out.near_theta_zero =
        theta_at_winv.modulus() < theta_at_winv.err.to_real(prec) * Real::of(10L, prec);
    return out;
}

MainTermValue main_term_large_w(unsigned t, long ell, long n, const Complex& w, double theta_tol,
                                mpfr_prec_t prec) {
    if (t == 0) throw domain_error("main_term_large_w: t must be positive");
    if (!(w.abs_lower().cmp(1.0) > 0))
        throw domain_error("main_term_large_w: requires |w| > 1");
    ThetaSpec spec{t, norm_residue(ell, t)};
    Complex theta = theta_eval(spec, at_prec(w, prec).inv(), theta_tol, ThetaForm::partition);
    return main_term_large_w(t, ell, n, w, theta, prec);
}

std::vector<Complex> main_term_small_w_batch(unsigned t, const std::vector<long>& ns,
                                             const Complex& w, double tol, mpfr_prec_t prec,
                                             const AtOptions& opt) {
    for (long n : ns)
        if (n < 1) throw domain_error("main_term_small_w: n must be positive");
    std::vector<Complex> vals = eval_At_batch(t, w, ns, tol, prec, opt);
    for (std::size_t i = 0; i < ns.size(); ++i)
        vals[i] = vals[i].mul_real(small_w_scalar(t, ns[i], prec));
    return vals;
}

Complex main_term_small_w(unsigned t, long n, const Complex& w, double tol, mpfr_prec_t prec,
                          const AtOptions& opt) {
    return main_term_small_w_batch(t, {n}, w, tol, prec, opt).at(0);
}

AsymptoticReport ratio_report(unsigned t, long ell, const Complex& w, std::vector<long> ns,
                              const RatioOptions& opt) {
    if (t == 0) throw domain_error("ratio_report: t must be positive");
    AsymptoticReport rep;
    rep.t = t;
    rep.ell = norm_residue(ell, t);
    rep.w = w;
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (ns.empty()) return rep;
    if (ns.front() < 1) throw domain_error("ratio_report: n values must be positive");

    std::vector<WPoly> family = expand_Ht(t, static_cast<unsigned>(ns.back()));
    Complex wp = at_prec(w, opt.prec);

    bool large = w.modulus().cmp(1.0) > 0;
    std::vector<Real> mains;
    mains.reserve(ns.size());
    if (large) {
        ThetaSpec spec{t, static_cast<unsigned>(rep.ell)};
        Complex theta = theta_eval(spec, wp.inv(), opt.theta_tol, ThetaForm::partition);
        for (long n : ns)
            mains.push_back(main_term_large_w(t, rep.ell, n, w, theta, opt.prec).modulus);
    } else {
        std::vector<Complex> vals = main_term_small_w_batch(t, ns, wp, opt.at_tol, opt.prec,
                                                            opt.at);
        for (const Complex& v : vals) mains.push_back(v.modulus());
    }

    for (std::size_t i = 0; i < ns.size(); ++i) {
        AsymptoticEntry e;
        e.n = ns[i];
        e.exact_modulus = family[static_cast<std::size_t>(ns[i])].eval_ball(wp).modulus();
        e.main_modulus = mains[i];
        e.ratio = e.exact_modulus / e.main_modulus;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

LocalizationVerdict classify_localization(const CertifiedRoots& roots,
                                          const std::vector<Complex>& z_points, unsigned t,
                                          long ell, long n, double eps, double w0) {
    LocalizationVerdict v;
    v.n = n;
    v.t = t;
    v.ell = norm_residue(ell, t);
    v.eps = eps;
    v.w0 = w0;
    v.zeros_at_origin = roots.zeros_at_origin;
    for (std::size_t i = roots.zeros_at_origin; i < roots.roots.size(); ++i) {
        const Complex& r = roots.roots[i];
        double m = r.modulus().to_double();
        if (m >= w0 && m <= 1.0 + eps) {
            v.annulus_roots.push_back(r);
            continue;
        }
        bool near = false;
        for (const Complex& z : z_points)
            if ((r - z).modulus().to_double() <= eps) {
                near = true;
                break;
            }
        (near ? v.theta_neighborhood_roots : v.violations).push_back(r);
    }
    return v;
}

LocalizationVerdict zero_localization_check(unsigned t, long ell, long n, double eps, double w0,
                                            const DiscZeroOptions& zopt,
                                            const RootOptions& ropt) {
    if (t < 6) throw domain_error("zero_localization_check: requires t >= 6");
    if (n < 1) throw domain_error("zero_localization_check: n must be positive");
    unsigned l = norm_residue(ell, t);
    if (norm_residue(n, t) != l)
        throw domain_error("zero_localization_check: n is not in the residue class ell (mod t)");
    if (!(eps > 0 && w0 > 0))
        throw domain_error("zero_localization_check: eps and w0 must be positive");

    std::vector<WPoly> family = expand_Ht(t, static_cast<unsigned>(n));
    CertifiedRoots roots = solve_roots(family[static_cast<std::size_t>(n)], ropt);
    DiscZeroReport zr = theta_zeros(ThetaSpec{t, l}, eps, zopt);
    return classify_localization(roots, zr.zeros, t, ell, n, eps, w0);
}

namespace {

std::vector<Int> coeff_vector(const WPoly& poly) {
    unsigned d = *poly.degree();
    std::vector<Int> c(d + 1);
    for (unsigned k = 0; k <= d; ++k) c[k] = poly.coeff(k);
    return c;
}

RRClaimReport rr_eval_one(int b, long n, double tol, const WPoly& poly, const RootOptions& opt) {
    RRClaimReport rep;
    rep.b = b;
    rep.n = n;
    if (poly.is_zero()) {
        rep.trivial = true;
        return rep;
    }
    if (*poly.degree() == 0) return rep;  // nonzero constant: no roots, nothing to check

    CertifiedRoots cr = solve_roots(poly, opt);
    double worst = -std::numeric_limits<double>::infinity();
    for (const Complex& r : cr.roots) {
        double e = r.err.to_double_up();
        double re = r.re.to_double() + e;
        double im = std::fabs(r.im.to_double()) + e;
        if (re > worst) {
            worst = re;
            rep.worst = r;
        }
        rep.max_abs_im = std::max(rep.max_abs_im, im);
    }
    rep.max_re = worst;
    rep.pass = worst <= tol;
    std::vector<Int> coeffs = coeff_vector(poly);
    rep.vieta_dev = vieta_max_rel_dev(coeffs, cr);
    rep.recon_dev = reconstruct_max_rel_dev(coeffs, cr);
    return rep;
}

} // namespace

RRClaimReport rr_claim_check(int b, long n, double tol, const RootOptions& opt) {
    if (b != 0 && b != 1) throw domain_error("rr_claim_check: b must be 0 or 1");
    if (n < 1) throw domain_error("rr_claim_check: n must be positive");
    PabExpansion fam = expand_pab(Rat(1), Rat(b), Rat(n));
    return rr_eval_one(b, n, tol, fam.at(Rat(n)), opt);
}

RRScanReport rr_claim_scan(int b, long nmax, double tol, const RootOptions& opt, int jobs) {
    if (b != 0 && b != 1) throw domain_error("rr_claim_scan: b must be 0 or 1");
    if (nmax < 1) throw domain_error("rr_claim_scan: nmax must be positive");
    PabExpansion fam = expand_pab(Rat(1), Rat(b), Rat(nmax));

    std::vector<RRClaimReport> per_n(static_cast<std::size_t>(nmax) + 1);
    std::atomic<long> next{1};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
        for (;;) {
            long n = next.fetch_add(1);
            if (n > nmax) return;
            try {
                const WPoly& poly = fam.at(Rat(n));
                if (poly.is_zero()) {
                    RRClaimReport trivial;
                    trivial.b = b;
                    trivial.n = n;
                    trivial.trivial = true;
                    per_n[static_cast<std::size_t>(n)] = trivial;
                } else {
                    per_n[static_cast<std::size_t>(n)] = rr_eval_one(b, n, tol, poly, opt);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(nmax)));
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    RRScanReport rep;
    rep.b = b;
    rep.nmax = nmax;
    double worst = -std::numeric_limits<double>::infinity();
    for (long n = 1; n <= nmax; ++n) {
        const RRClaimReport& one = per_n[static_cast<std::size_t>(n)];
        const WPoly& poly = fam.at(Rat(n));
        if (poly.is_zero()) continue;
        ++rep.solved;
        rep.pass = rep.pass && one.pass;
        if (*poly.degree() >= 1 && one.max_re > worst) {
            worst = one.max_re;
            rep.worst_n = n;
            rep.worst_re = one.max_re;
        }
        rep.max_abs_im = std::max(rep.max_abs_im, one.max_abs_im);
        rep.worst_vieta = std::max(rep.worst_vieta, one.vieta_dev);
        rep.worst_recon = std::max(rep.worst_recon, one.recon_dev);
    }
    return rep;
}

bool validate_w0(unsigned t, double w0, const std::vector<long>& ns, double tol,
                 mpfr_prec_t prec) {
    if (!(w0 > 0)) throw domain_error("validate_w0: w0 must be positive");
    if (ns.empty()) throw domain_error("validate_w0: need at least one n");
    AtOptions opt;
    opt.w0 = w0;
    const double pts[][2] = {{0, 0}, {w0, 0}, {-w0, 0}, {0, w0}, {0.6 * w0, 0.8 * w0}};
    Real ten = Real::of(10L, prec);
    for (const auto& p : pts) {
        Complex w(Real::of(p[0], prec), Real::of(p[1], prec));
        std::vector<Complex> vals = eval_At_batch(t, w, ns, tol, prec, opt);
        for (const Complex& v : vals)
            if (!(v.err.to_real(prec) * ten < v.modulus())) return false;
    }
    return true;
}

} // namespace hookpoly
