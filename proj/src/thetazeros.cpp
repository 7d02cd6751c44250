#include "hookpoly/thetazeros.hpp"

#include <algorithm>
#include <cmath>

#include "hookpoly/errors.hpp"

namespace hookpoly {

namespace {

// a contour sample landed inside (or indistinguishably close to) a zero ball;
// the caller perturbs the contour and retries
struct ambiguity {};

struct Ctx {
    ThetaSpec spec;
    DiscZeroOptions opt;
    ThetaOptions topt;
    long evals = 0;

    void charge(long n = 1) {
        evals += n;
        if (evals > opt.eval_budget)
            throw resource_limit_error("theta_zeros: contour evaluation budget exceeded (" +
                                       std::to_string(opt.eval_budget) + ")");
    }

    Complex eval(double re, double im) {
        charge();
        Complex z(Real::of(re, opt.prec), Real::of(im, opt.prec));
        return theta_series_core(spec, z, opt.tol, topt);
    }
};

// image sample: argument plus log-modulus, with the nonvanishing certificate
struct Samp {
    double a;   // atan2 argument
    double lm;  // natural log of the modulus (exponent-safe)
};

Samp sample(Ctx& c, double re, double im) {
    Complex v = c.eval(re, im);
    if (!(v.abs_lower().sign() > 0)) throw ambiguity{};
    Real m = v.modulus();
    long e = 0;
    double f = mpfr_get_d_2exp(&e, m.raw(), MPFR_RNDN);
    return {std::atan2(v.im.to_double(), v.re.to_double()),
            std::log(std::fabs(f)) + static_cast<double>(e) * M_LN2};
}

double wrap(double d) {
    while (d > M_PI) d -= 2 * M_PI;
    while (d < -M_PI) d += 2 * M_PI;
    return d;
}

// accumulated argument change along one parametrized contour piece. A wrapped
// endpoint delta alone can hide a full hidden turn (the image spirals fastest
// where the series peaks, near the positive real axis), but a hidden spin is
// always flanked by a steep modulus swing, so splitting until the log-modulus
// is also locally flat exposes it
template <typename PointFn>
double arg_sweep(Ctx& c, const PointFn& at, double s0, Samp a0, double s1, Samp a1,
                 int depth = 0) {
    double d = wrap(a1.a - a0.a);
    if (std::fabs(d) < M_PI / 4 && std::fabs(a1.lm - a0.lm) < M_LN2) return d;
    if (depth > 52) throw ambiguity{};  // step underflow: a zero sits on the contour
    double sm = 0.5 * (s0 + s1);
    auto [re, im] = at(sm);
    Samp am = sample(c, re, im);
    return arg_sweep(c, at, s0, a0, sm, am, depth + 1) +
           arg_sweep(c, at, sm, am, s1, a1, depth + 1);
}

long to_count(double total_arg) {
    double k = total_arg / (2 * M_PI);
    double r = std::round(k);
    if (std::fabs(k - r) > 0.1 || r < -0.1) throw ambiguity{};
    return static_cast<long>(r);
}

long circle_winding(Ctx& c, double radius, int density) {
    int n0 = 64 * std::max(1, density);
    std::vector<double> th(n0 + 1);
    std::vector<Samp> ar(n0 + 1);
    for (int i = 0; i < n0; ++i) {
        th[i] = 2 * M_PI * i / n0;
        ar[i] = sample(c, radius * std::cos(th[i]), radius * std::sin(th[i]));
    }
    th[n0] = 2 * M_PI;
    ar[n0] = ar[0];
    auto at = [radius](double t) {
        return std::pair<double, double>(radius * std::cos(t), radius * std::sin(t));
    };
    double tot = 0;
    for (int i = 0; i < n0; ++i) tot += arg_sweep(c, at, th[i], ar[i], th[i + 1], ar[i + 1]);
    return to_count(tot);
}

struct Box {
    double x0, x1, y0, y1;
    double side() const { return std::max(x1 - x0, y1 - y0); }
};

long box_winding(Ctx& c, const Box& b) {
    // corners counterclockwise, one sweep per edge
    double xs[5] = {b.x0, b.x1, b.x1, b.x0, b.x0};
    double ys[5] = {b.y0, b.y0, b.y1, b.y1, b.y0};
    Samp ar[5];
    for (int i = 0; i < 4; ++i) ar[i] = sample(c, xs[i], ys[i]);
    ar[4] = ar[0];
    double tot = 0;
    for (int e = 0; e < 4; ++e) {
        double ax = xs[e], ay = ys[e], bx = xs[e + 1], by = ys[e + 1];
        auto at = [=](double s) {
            return std::pair<double, double>(ax + (bx - ax) * s, ay + (by - ay) * s);
        };
        tot += arg_sweep(c, at, 0.0, ar[e], 1.0, ar[e + 1]);
    }
    return to_count(tot);
}

// Newton on the series core from a box center; truncation tolerance follows
// the step size down
Complex polish(Ctx& c, const Box& b) {
    mpfr_prec_t prec = c.opt.prec;
    Complex z(Real::of(0.5 * (b.x0 + b.x1), prec), Real::of(0.5 * (b.y0 + b.y1), prec));
    double step = b.side();
    for (int it = 0;; ++it) {
        if (it == c.opt.newton_iters)
            throw convergence_error("theta_zeros: Newton failed to settle in a box");
        double tol = std::min(1e-12, std::max(c.opt.tol, step * step * 1e-4));
        c.charge(2);
        Complex f = theta_series_core(c.spec, z, tol, c.topt);
        Complex df = theta_series_core_deriv(c.spec, z, tol, c.topt);
        Complex delta = f / df;
        z = z - delta;
        z.err = Mag();
        double ns = delta.modulus().to_double();
        if (!std::isfinite(ns)) throw convergence_error("theta_zeros: Newton hit a non-number");
        if (ns < 1e-30 && it > 0) break;
        step = ns;
    }
    double inx = z.re.to_double(), iny = z.im.to_double();
    if (inx < b.x0 - b.side() || inx > b.x1 + b.side() || iny < b.y0 - b.side() ||
        iny > b.y1 + b.side())
        throw ambiguity{};  // Newton escaped: the box was not actually isolating

    // enclosure: certified residual over certified slope, doubled for the
    // quadratic remainder; the isolating box bounds it when the slope's lower
    // bound degenerates
    c.charge(2);
    Complex f = theta_series_core(c.spec, z, c.opt.tol, c.topt);
    Complex df = theta_series_core_deriv(c.spec, z, c.opt.tol, c.topt);
    Real slope = df.abs_lower();
    Mag enc = slope.sign() > 0 ? f.abs_upper().div_low(slope).mul_2si(1) : Mag::of_d(b.side());
    z.err = Mag::max(enc, Mag::of_d(1e-60));
    return z;
}

// recursive quadrant subdivision of a box known to hold k zeros; the interior
// cut lines are shifted when a zero sits on them, which keeps the box's own
// (already validated) boundary fixed
void locate(Ctx& c, const Box& b, long k, int depth, std::vector<Complex>& found) {
    if (k == 0) return;
    if (k == 1 && b.side() <= c.opt.isolate_side) {
        try {
            found.push_back(polish(c, b));
            return;
        } catch (const ambiguity&) {
            // not isolating after all: split further
        }
    }
    if (depth >= c.opt.max_depth)
        throw convergence_error("theta_zeros: subdivision depth cap reached");

    static const double offs[] = {0,          1.0 / 64,  -1.0 / 64, 3.0 / 128,
                                  -3.0 / 128, 5.0 / 128, -5.0 / 128, 7.0 / 128};
    for (int a = 0; a < 8; ++a) {
        double xm = b.x0 + (b.x1 - b.x0) * (0.5 + offs[a]);
        double ym = b.y0 + (b.y1 - b.y0) * (0.5 + offs[(a + 3) % 8]);
        Box q[4] = {{b.x0, xm, b.y0, ym},
                    {xm, b.x1, b.y0, ym},
                    {b.x0, xm, ym, b.y1},
                    {xm, b.x1, ym, b.y1}};
        long kk[4];
        long sum = 0;
        try {
            for (int i = 0; i < 4; ++i) {
                kk[i] = box_winding(c, q[i]);
                sum += kk[i];
            }
        } catch (const ambiguity&) {
            continue;
        }
        if (sum != k) continue;  // a zero straddles a cut at sample resolution
        for (int i = 0; i < 4; ++i) locate(c, q[i], kk[i], depth + 1, found);
        return;
    }
    throw convergence_error("theta_zeros: no unambiguous quadrant split found");
}

// one full located sweep over a disc-covering cell grid; cells entirely
// outside the disc are pruned (keeps contour samples near |z| = radius, where
// the series is still cheap). Completeness is certified afterwards against
// the circle count, not per cell, so per-cell contour nudges are safe.
std::vector<Complex> grid_sweep(Ctx& c, double radius, double shift) {
    const int m = 16;
    const double s = 2 * radius / m;
    std::vector<Complex> found;
    for (int i = -1; i < m + 1; ++i)
        for (int j = -1; j < m + 1; ++j) {
            Box b{-radius + shift + i * s, -radius + shift + (i + 1) * s,
                  -radius + shift + j * s, -radius + shift + (j + 1) * s};
            // nearest point of the cell to the origin
            double nx = (0.0 < b.x0) ? b.x0 : (0.0 > b.x1 ? b.x1 : 0.0);
            double ny = (0.0 < b.y0) ? b.y0 : (0.0 > b.y1 ? b.y1 : 0.0);
            if (std::hypot(nx, ny) > radius) continue;

            long k = -1;
            for (int t = 0; t < 8 && k < 0; ++t) {
                try {
                    k = box_winding(c, b);
                } catch (const ambiguity&) {
                    // grow the cell slightly; overlap with neighbours only
                    // risks duplicates, which the dedup pass removes
                    double g = s / 256 * (t + 1);
                    b = Box{b.x0 - g, b.x1 + g, b.y0 - g, b.y1 + g};
                }
            }
            if (k < 0)
                throw convergence_error("theta_zeros: a grid cell stayed ambiguous");
            locate(c, b, k, 0, found);
        }
    return found;
}

} // namespace

long theta_circle_winding(const ThetaSpec& spec, double radius, const DiscZeroOptions& opt,
                          int density) {
    if (!(radius > 0 && radius < 1))
        throw domain_error("theta_circle_winding: radius must lie in (0,1)");
    Ctx c{spec, opt, {}};
    for (int k = 0; k < 12; ++k) {
        try {
            return circle_winding(c, radius, density);
        } catch (const ambiguity&) {
            radius *= (k % 2 ? 1.0 - 1e-4 * (k + 1) : 1.0 + 1e-4 * (k + 1));
        }
    }
    throw convergence_error("theta_circle_winding: every perturbed contour stayed ambiguous");
}

DiscZeroReport theta_zeros(const ThetaSpec& spec, double eps, const DiscZeroOptions& opt) {
    if (!(eps > 0)) throw domain_error("theta_zeros: eps must be positive");
    DiscZeroReport rep;
    rep.spec = spec;

    Ctx c{spec, opt, {}};
    double radius = 1.0 / (1.0 + eps);

    for (int attempt = 0;; ++attempt) {
        if (attempt == 6)
            throw convergence_error("theta_zeros: located zeros never matched the circle count");
        long count = -1;
        for (int k = 0; k < 8 && count < 0; ++k) {
            try {
                count = circle_winding(c, radius, 1);
            } catch (const ambiguity&) {
                radius *= 1.0 + 3e-5 * (k + 1);
            }
        }
        if (count < 0)
            throw convergence_error("theta_zeros: boundary circle stayed ambiguous");
        rep.radius = radius;
        rep.count = count;
        rep.disc_zeros.clear();
        if (count == 0) break;

        std::vector<Complex> found = grid_sweep(c, radius, attempt * radius / 97.0);

        // dedup zeros recovered twice through overlapping (nudged) cells
        std::vector<Complex> uniq;
        for (auto& z : found) {
            bool dup = false;
            for (auto& u : uniq) {
                Real gap = (z - u).modulus();
                if (gap.cmp(1e-12) < 0) {
                    dup = true;
                    break;
                }
            }
            if (!dup) uniq.push_back(z);
        }
        for (auto& z : uniq) {
            double mz = z.modulus().to_double();
            if (mz <= radius) rep.disc_zeros.push_back(z);
        }
        if (static_cast<long>(rep.disc_zeros.size()) == count) break;
        // a zero too near |z| = radius flipped sides, or a cell pair both
        // nudged away from one: translate the grid and recount
        radius *= 1.0 + 2e-5;
    }

    std::sort(rep.disc_zeros.begin(), rep.disc_zeros.end(),
              [](const Complex& a, const Complex& b) {
                  Real ma = a.modulus(), mb = b.modulus();
                  if (ma < mb) return true;
                  if (mb < ma) return false;
                  return Real::atan2(a.im, a.re) < Real::atan2(b.im, b.re);
              });
    rep.zeros.reserve(rep.disc_zeros.size());
    for (const auto& z : rep.disc_zeros) rep.zeros.push_back(z.inv());
    return rep;
}

} // namespace hookpoly
