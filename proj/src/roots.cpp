#include "hookpoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hookpoly/errors.hpp"

namespace hookpoly {

namespace {

Real at_prec(const Real& x, mpfr_prec_t p) {
    Real r(p);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Complex at_prec(const Complex& z, mpfr_prec_t p) {
    return Complex(at_prec(z.re, p), at_prec(z.im, p));
}

double log2_abs(const Int& c) {
    long e;
    double m = mpz_get_d_2exp(&e, c.get_mpz_t());
    return std::log2(std::fabs(m)) + static_cast<double>(e);
}

// Newton-polygon initial guesses (Bini's scheme): radii from the upper convex
// hull of (k, log2|c_k|), angles spread per hull edge with fixed offsets so no
// two starts coincide and none sits exactly on the real axis.
std::vector<Complex> initial_points(const std::vector<Int>& c, mpfr_prec_t prec) {
    struct Pt {
        unsigned k;
        double l;
    };
    std::vector<Pt> pts;
    for (unsigned k = 0; k < c.size(); ++k)
        if (c[k] != 0) pts.push_back({k, log2_abs(c[k])});

    auto cross = [](const Pt& o, const Pt& a, const Pt& b) {
        return (double(a.k) - o.k) * (b.l - o.l) - (a.l - o.l) * (double(b.k) - o.k);
    };
    std::vector<Pt> hull;
    for (const Pt& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0)
            hull.pop_back();
        hull.push_back(p);
    }

    unsigned d = static_cast<unsigned>(c.size() - 1);
    std::vector<Complex> z;
    z.reserve(d);
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        unsigned m = hull[e + 1].k - hull[e].k;
        double lr = (hull[e].l - hull[e + 1].l) / m;
        Real rho(prec);
        mpfr_set_d(rho.raw(), lr, MPFR_RNDN);
        mpfr_exp2(rho.raw(), rho.raw(), MPFR_RNDN);
        for (unsigned s = 0; s < m; ++s) {
            double th = 2.0 * M_PI * s / m + 0.37 * (double(e) + 1.0) + M_PI / (2.0 * d);
            Real sn(prec), cs(prec), a(prec);
            mpfr_set_d(a.raw(), th, MPFR_RNDN);
            Real::sin_cos(sn, cs, a);
            z.emplace_back(rho * cs, rho * sn);
        }
    }
    if (z.size() != d) throw error("initial_points: hull did not cover the degree");
    return z;
}

// p(z) and p'(z) midpoints by simultaneous Horner
void horner2(const std::vector<Complex>& rc, const Complex& z, Complex& pv, Complex& dv) {
    size_t d = rc.size() - 1;
    pv = rc[d];
    dv = Complex(z.prec());
    for (size_t k = d; k-- > 0;) {
        dv = dv * z + pv;
        pv = pv * z + rc[k];
    }
}

bool finite(const Complex& z) {
    return mpfr_number_p(z.re.raw()) && mpfr_number_p(z.im.raw());
}

struct Certificate {
    std::vector<Mag> radii;
    std::vector<double> residuals;
    bool disjoint = true;
    bool accepted = true;
};

Certificate certify(const WPoly& poly, const std::vector<Complex>& z, mpfr_prec_t prec,
                    double target_resid) {
    size_t d = z.size();
    Complex lead = Complex::of_int(poly.coeff(static_cast<unsigned>(d)), prec);

    Certificate cert;
    cert.radii.resize(d);
    cert.residuals.resize(d);
    for (size_t i = 0; i < d; ++i) {
        Complex pv = poly.eval_ball(z[i]);
        Complex den = lead;
        for (size_t j = 0; j < d; ++j)
            if (j != i) den = den * (z[i] - z[j]);
        if (!(den.abs_lower().sign() > 0)) {
            // coincident approximations: reject so the caller re-iterates
            cert.accepted = false;
            cert.disjoint = false;
            cert.radii[i] = Mag::of_ui(1);
            cert.residuals[i] = 1.0;
            continue;
        }
        Complex w = pv / den;
        cert.radii[i] = Mag::of_ui(static_cast<unsigned long>(d)) * w.abs_upper();

        // relative residual: acceptance gate per the module contract
        Mag scale = poly.coeff_abs_eval(Mag::hypot_up(z[i].re, z[i].im));
        Real ratio = pv.abs_upper().to_real(64) / scale.to_real(64);
        cert.residuals[i] = mpfr_get_d(ratio.raw(), MPFR_RNDU);
        if (!(cert.residuals[i] <= target_resid)) cert.accepted = false;
    }
    for (size_t i = 0; i < d && cert.disjoint; ++i)
        for (size_t j = i + 1; j < d; ++j) {
            Real gap = (z[i] - z[j]).abs_lower();
            if (!(gap > (cert.radii[i] + cert.radii[j]).to_real(64))) {
                cert.disjoint = false;
                break;
            }
        }
    return cert;
}

// overlapping disks: widen each member's radius to cover its whole connected
// component (any zero inside the component stays enclosed)
void widen_clusters(const std::vector<Complex>& z, std::vector<Mag>& radii) {
    size_t d = z.size();
    std::vector<size_t> comp(d);
    std::iota(comp.begin(), comp.end(), size_t{0});
    auto find = [&](size_t i) {
        while (comp[i] != i) i = comp[i] = comp[comp[i]];
        return i;
    };
    for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) {
            Real gap = (z[i] - z[j]).abs_lower();
            if (!(gap > (radii[i] + radii[j]).to_real(64))) comp[find(i)] = find(j);
        }
    std::vector<Mag> out(d);
    for (size_t i = 0; i < d; ++i) {
        out[i] = radii[i];
        for (size_t j = 0; j < d; ++j)
            if (j != i && find(i) == find(j)) {
                Mag reach = Mag::hypot_up(z[i].re - z[j].re, z[i].im - z[j].im) + radii[j];
                out[i] = Mag::max(out[i], reach);
            }
    }
    radii = std::move(out);
}

} // namespace

CertifiedRoots solve_roots(const std::vector<Int>& coeffs, const RootOptions& opt) {
    std::vector<Int> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) throw domain_error("solve_roots: zero polynomial");

    unsigned strip = 0;
    while (strip < c.size() && c[strip] == 0) ++strip;
    c.erase(c.begin(), c.begin() + strip);

    CertifiedRoots out;
    out.zeros_at_origin = strip;
    out.final_prec = opt.start_prec;

    unsigned d = static_cast<unsigned>(c.size() - 1);
    WPoly poly;
    for (unsigned k = 0; k <= d; ++k) poly.add_term(k, c[k]);

    std::vector<Complex> z;
    std::vector<Mag> radii;
    std::vector<double> resid;
    bool disjoint = true;
    bool certified = false;

    if (d == 0) {
        certified = true;
    } else {
        z = initial_points(c, opt.start_prec);
        for (mpfr_prec_t prec = opt.start_prec; prec <= opt.max_prec; prec *= 2) {
            out.final_prec = prec;
            std::vector<Complex> rc;
            rc.reserve(d + 1);
            for (unsigned k = 0; k <= d; ++k) rc.push_back(Complex::of_int(c[k], prec));
            for (auto& zi : z) zi = at_prec(zi, prec);

            // Jacobi-synchronous Ehrlich–Aberth sweeps
            Real thresh(64);
            mpfr_set_ui_2exp(thresh.raw(), 1, -(prec - 24), MPFR_RNDN);
            Real best(64);
            int stall = 0;
            for (int it = 0; it < opt.max_iter; ++it) {
                std::vector<Complex> corr(d, Complex(prec));
                std::vector<char> blown(d, 0);
                for (unsigned i = 0; i < d; ++i) {
                    try {
                        Complex pv(prec), dv(prec);
                        horner2(rc, z[i], pv, dv);
                        if (pv.re.is_zero() && pv.im.is_zero()) continue;
                        Complex nw = pv / dv;
                        Complex s(prec);
                        for (unsigned j = 0; j < d; ++j)
                            if (j != i) s = s + (z[i] - z[j]).inv();
                        Complex den = Complex::one(prec) - nw * s;
                        Complex cr = nw / den;
                        if (!finite(cr)) cr = finite(nw) ? nw : Complex(prec);
                        cr.err = Mag();
                        corr[i] = std::move(cr);
                    } catch (const convergence_error&) {
                        // coincident approximations make z_i - z_j an exact
                        // zero: flag the point for an off-axis restart
                        blown[i] = 1;
                    }
                }
                Real maxrel(64);
                bool collided = false;
                for (unsigned i = 0; i < d; ++i) {
                    z[i] = z[i] - corr[i];
                    z[i].err = Mag();
                    if (!finite(z[i]) || blown[i]) collided = true;
                    Real rel = corr[i].modulus() / (Real::of(1L, 64) + z[i].modulus());
                    if (rel > maxrel) maxrel = rel;
                }
                // points that became bitwise identical stall the iteration and
                // blow up certification; keep the first, restart the rest
                for (unsigned i = 0; i < d; ++i)
                    for (unsigned j = i + 1; j < d; ++j)
                        if (z[i].re == z[j].re && z[i].im == z[j].im) {
                            blown[j] = 1;
                            collided = true;
                        }
                if (collided) {
                    for (unsigned i = 0; i < d; ++i)
                        if (!finite(z[i]) || blown[i]) {
                            Real sn(prec), cs(prec), a(prec);
                            mpfr_set_d(a.raw(), 0.7 + i, MPFR_RNDN);
                            Real::sin_cos(sn, cs, a);
                            z[i] = Complex(cs + cs, sn);
                        }
                    continue;
                }
                if (maxrel < thresh) break;
                // corrections hit the rounding floor: hand over to certification
                if (it == 0 || maxrel < best * Real::of(0.75, 64)) {
                    best = maxrel;
                    stall = 0;
                } else if (++stall >= 8) {
                    break;
                }
            }

            Certificate cert = certify(poly, z, prec, opt.target_resid);
            radii = cert.radii;
            resid = cert.residuals;
            disjoint = cert.disjoint;
            if (cert.accepted) {
                certified = true;
                break;
            }
        }
        if (!certified) {
            double worst = resid.empty() ? 1.0 : *std::max_element(resid.begin(), resid.end());
            throw convergence_error("solve_roots: worst relative residual " +
                                    std::to_string(worst) + " above target at " +
                                    std::to_string(opt.max_prec) + " bits");
        }
        if (!disjoint) widen_clusters(z, radii);
    }

    for (unsigned i = 0; i < strip; ++i) {
        out.roots.push_back(Complex::zero(out.final_prec));
        out.residuals.push_back(0.0);
    }
    std::vector<size_t> order(z.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::vector<Real> mods, args;
    mods.reserve(z.size());
    args.reserve(z.size());
    for (const auto& zi : z) {
        mods.push_back(zi.modulus());
        args.push_back(Real::atan2(zi.im, zi.re));
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (mods[a] < mods[b]) return true;
        if (mods[b] < mods[a]) return false;
        return args[a] < args[b];
    });
    for (size_t idx : order) {
        Complex r = z[idx];
        r.err = radii[idx];
        out.roots.push_back(std::move(r));
        out.residuals.push_back(resid[idx]);
    }
    out.disks_disjoint = disjoint;
    return out;
}

Real cauchy_bound(const WPoly& poly) {
    if (poly.is_zero()) throw domain_error("cauchy_bound: zero polynomial");
    unsigned d = *poly.degree();
    Mag mx;
    for (unsigned k = 0; k < d; ++k) mx = Mag::max(mx, Mag::from_int(poly.coeff(k)));
    Int la = abs(poly.coeff(d));
    Real lead(128);
    mpfr_set_z(lead.raw(), la.get_mpz_t(), MPFR_RNDD);
    return mx.div_low(lead).to_real(128) + Real::of(1L, 128);
}

CertifiedRoots solve_roots(const WPoly& poly, const RootOptions& opt) {
    if (poly.is_zero()) throw domain_error("solve_roots: zero polynomial");
    unsigned d = *poly.degree();
    std::vector<Int> c(d + 1);
    for (unsigned k = 0; k <= d; ++k) c[k] = poly.coeff(k);
    return solve_roots(c, opt);
}

double vieta_max_rel_dev(const std::vector<Int>& coeffs, const CertifiedRoots& r) {
    std::vector<Int> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.size() < 2) throw domain_error("vieta_max_rel_dev: degree must be >= 1");
    size_t d = c.size() - 1;
    if (r.roots.size() != d) throw domain_error("vieta_max_rel_dev: root count != degree");
    size_t m = r.zeros_at_origin;
    if (m > d || c[m] == 0)
        throw domain_error("vieta_max_rel_dev: origin multiplicity disagrees with coefficients");

    // product closure with the origin multiplicity factored out:
    // |lead| * prod |r_i| over nonzero roots must equal |lowest nonzero coeff|
    mpfr_prec_t prec = std::max<mpfr_prec_t>(r.final_prec, 256);
    Real prod = Real::of(c[d], prec).abs();
    for (size_t i = m; i < r.roots.size(); ++i) prod = prod * r.roots[i].modulus();
    Real target = Real::of(c[m], prec).abs();
    Real dev = (prod - target).abs() / target;
    return dev.to_double();
}

double reconstruct_max_rel_dev(const std::vector<Int>& coeffs, const CertifiedRoots& r) {
    std::vector<Int> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) throw domain_error("reconstruct_max_rel_dev: zero polynomial");
    size_t d = c.size() - 1;
    if (r.roots.size() != d) throw domain_error("reconstruct_max_rel_dev: root count != degree");

    // evaluate lead * prod (w - r_i) * w^mult against the coefficient form at
    // eight pseudo-random points on |w| = 2 (fixed low-discrepancy angles, so
    // runs are reproducible); deviations are relative to sum |c_k| 2^k, the
    // magnitude actually moved through the evaluation
    mpfr_prec_t prec = std::max<mpfr_prec_t>(r.final_prec, 256);
    Real two = Real::of(2L, prec);
    Mag scale;
    Mag pw = Mag::of_ui(1);
    for (const auto& ck : c) {
        scale += Mag::from_int(ck) * pw;
        pw = pw * Mag::of_ui(2);
    }

    double worst = 0;
    for (int k = 0; k < 8; ++k) {
        double ang = 2.0 * 3.14159265358979323846 *
                     std::fmod(0.0137 + 0.6180339887498949 * k, 1.0);
        Complex w = Complex(Real::of(std::cos(ang), prec) * two,
                            Real::of(std::sin(ang), prec) * two);
        Complex recon = Complex::of_int(c[d], prec);
        for (size_t i = r.zeros_at_origin; i < r.roots.size(); ++i)
            recon = recon * (w - r.roots[i]);
        if (r.zeros_at_origin) recon = recon * w.pow_int(static_cast<long>(r.zeros_at_origin));
        Complex exact(prec);
        for (size_t i = c.size(); i-- > 0;) exact = exact * w + Complex::of_int(c[i], prec);
        Mag dev = (recon - exact).abs_upper();
        worst = std::max(worst, dev.to_double_up() / scale.to_double_up());
    }
    return worst;
}

} // namespace hookpoly
