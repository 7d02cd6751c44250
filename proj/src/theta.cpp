#include "hookpoly/theta.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "hookpoly/errors.hpp"
#include "hookpoly/euler.hpp"
#include "hookpoly/partitions.hpp"

namespace hookpoly {

namespace {

void validate_spec(const ThetaSpec& spec) {
    if (spec.t < 1) throw domain_error("theta: t must be >= 1");
    if (spec.ell >= spec.t) throw domain_error("theta: ell must satisfy 0 <= ell < t");
}

// beta bounds |b.m|/t <= beta ||m|| on the hyperplane 1.m = 0 (Cauchy-Schwarz
// against b - mean(b) 1); beta^2 = (t^2-1)/(12t)
double beta_upper(unsigned t) {
    return std::nextafter(std::sqrt((static_cast<double>(t) * t - 1.0) / (12.0 * t)), 2.0);
}

struct LatticeCounts {
    unsigned t = 0;
    long R = 0;  // enumerated ||m|| <= R
    std::vector<std::vector<long long>> counts;  // [ell][j], j = exponent - ell/t
};

// largest bucket index whose count is provably complete at radius R: a point
// with ||m|| > R has exponent >= R^2/2 - beta R
long jexact_bound(const LatticeCounts& lc, unsigned ell) {
    double beta = beta_upper(lc.t);
    double g = 0.5 * static_cast<double>(lc.R) * lc.R - beta * lc.R;
    return static_cast<long>(std::floor(g - static_cast<double>(ell) / lc.t)) - 1;
}

void enumerate(unsigned t, long R, long long budget, LatticeCounts& out) {
    out.t = t;
    out.R = R;
    long long jalloc =
        static_cast<long long>(0.5 * static_cast<double>(R) * R + beta_upper(t) * R) + 3;
    out.counts.assign(t, std::vector<long long>(static_cast<size_t>(jalloc) + 1, 0));

    const long long R2 = static_cast<long long>(R) * R;
    long long visited = 0;
    // m_0..m_{t-2} free, m_{t-1} = -(sum); depth-first with the norm bound
    // p + s^2/(coords remaining) <= R^2
    std::vector<long> m(t, 0);
    auto rec = [&](auto&& self, unsigned d, long long p, long long s, long long B) -> void {
        if (d == t - 1) {
            long long last = -s;
            long long u = p + last * last;
            if (u > R2) return;
            if (++visited > budget)
                throw resource_limit_error("theta lattice enumeration budget exceeded");
            B += static_cast<long long>(t - 1) * last;
            long long ellm = ((B % t) + t) % t;
            // exponent = u/2 + B/t = j + ellm/t with j integral and >= 0
            long long j = u / 2 + (B - ellm) / static_cast<long long>(t);
            if (u % 2 != 0 || (B - ellm) % static_cast<long long>(t) != 0 || j < 0 ||
                j > jalloc)
                throw error("theta lattice: exponent structure violated (internal)");
            ++out.counts[static_cast<size_t>(ellm)][static_cast<size_t>(j)];
            return;
        }
        long long rem = static_cast<long long>(t) - d;
        if (p * rem + s * s > R2 * rem) return;  // p + s^2/rem > R^2
        long M = static_cast<long>(std::sqrt(static_cast<double>(R2 - p))) + 1;
        for (long v = -M; v <= M; ++v) {
            long long p2 = p + static_cast<long long>(v) * v;
            if (p2 > R2) continue;
            self(self, d + 1, p2, s + v, B + static_cast<long long>(d) * v);
        }
    };
    rec(rec, 0, 0, 0, 0);
}

std::mutex g_lattice_mu;
std::map<unsigned, LatticeCounts> g_lattice_cache;

const LatticeCounts& lattice_cache_for(unsigned t, long R_needed, long long budget) {
    std::lock_guard<std::mutex> lock(g_lattice_mu);
    auto it = g_lattice_cache.find(t);
    if (it != g_lattice_cache.end() && it->second.R >= R_needed) return it->second;
    LatticeCounts lc;
    enumerate(t, R_needed, budget, lc);
    auto [pos, _] = g_lattice_cache.insert_or_assign(t, std::move(lc));
    return pos->second;
}

// phi(j) = 2 beta + 2 sqrt(beta^2 + 2j + 2) + 1 (count-bound side of a tail
// term), directed rounding
Real phi_dir(double beta, long j, mpfr_rnd_t rnd) {
    Real r(64);
    mpfr_set_d(r.raw(), beta * beta, rnd);
    mpfr_add_si(r.raw(), r.raw(), 2 * j + 2, rnd);
    mpfr_sqrt(r.raw(), r.raw(), rnd);
    mpfr_mul_2si(r.raw(), r.raw(), 1, rnd);
    mpfr_add_d(r.raw(), r.raw(), 2.0 * beta + 1.0, rnd);
    return r;
}

// certified upper bound for sum_{j > X0} (2 sqrt(U(j)) + 1)^{t-1} sigma^j,
// which dominates the dropped lattice levels; nullopt if it will not certify
std::optional<Mag> lattice_tail_mag(unsigned t, double beta, const Mag& sig, long X0) {
    Mag total;
    long j = X0 + 1;
    for (int step = 0; step < 200000; ++step, ++j) {
        // true successive-term ratio is phi(j+1)^{t-1} sigma / phi(j)^{t-1},
        // decreasing in j; once it certifies < 15/16 the rest telescopes
        Real up = phi_dir(beta, j + 1, MPFR_RNDU);
        Real dn = phi_dir(beta, j, MPFR_RNDD);
        Mag ratio = Mag::abs_of(up).div_low(dn).pow_ui_up(t - 1) * sig;
        Mag term = Mag::abs_of(phi_dir(beta, j, MPFR_RNDU)).pow_ui_up(t - 1) *
                   sig.pow_ui_up(static_cast<unsigned long>(j));
        if (ratio.below(15.0 / 16.0)) {
            // total += term / (1 - ratio)
            Real one_minus(64);
            mpfr_ui_sub(one_minus.raw(), 1, ratio.to_real(64).raw(), MPFR_RNDD);
            total += term.div_low(one_minus);
            return total;
        }
        total += term;
    }
    return std::nullopt;
}

Complex theta_zero_arg(const ThetaSpec& spec, mpfr_prec_t p) {
    // Theta_{0,t}(0) = 1 (the zero vector); other classes vanish at z = 0
    return spec.ell == 0 ? Complex::one(p) : Complex::zero(p);
}

double sigma_upper_checked(const Complex& z, const char* who) {
    double sig = z.abs_upper().to_double_up();
    if (!(sig < 1.0 - 1e-9))
        throw domain_error(std::string(who) + ": |z| must be < 1 (got upper bound " +
                           std::to_string(sig) + ")");
    return sig;
}

// upper bound e^{pi sqrt(2m/3)} on p(m), used for partition-form tails
Mag partition_bound(long long m) {
    Real r(64);
    mpfr_set_si(r.raw(), 2 * m, MPFR_RNDU);
    mpfr_div_ui(r.raw(), r.raw(), 3, MPFR_RNDU);
    mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDU);
    Real pi_up(64);
    mpfr_const_pi(pi_up.raw(), MPFR_RNDU);
    mpfr_mul(r.raw(), r.raw(), pi_up.raw(), MPFR_RNDU);
    mpfr_exp(r.raw(), r.raw(), MPFR_RNDU);
    return Mag::abs_of(r);
}

// upper bound on the term ratio of sum p(ell + t i) sigma^i at index i:
// sigma * exp(t pi / sqrt(6 (ell + t i)))
Mag series_ratio_bound(unsigned t, unsigned ell, long i, const Mag& sig) {
    Real r(64);
    mpfr_set_si(r.raw(), 6 * (static_cast<long>(ell) + static_cast<long>(t) * i), MPFR_RNDD);
    mpfr_sqrt(r.raw(), r.raw(), MPFR_RNDD);
    Real pi_up(64);
    mpfr_const_pi(pi_up.raw(), MPFR_RNDU);
    Real e(64);
    mpfr_mul_ui(e.raw(), pi_up.raw(), t, MPFR_RNDU);
    mpfr_div(e.raw(), e.raw(), r.raw(), MPFR_RNDU);
    mpfr_exp(e.raw(), e.raw(), MPFR_RNDU);
    return Mag::abs_of(e) * sig;
}

struct CoreTrunc {
    long I;      // last included index
    Mag tail;    // certified bound on the dropped terms
};

// choose and certify the truncation of S (or S' when deriv) at |z| <= sig
CoreTrunc core_truncation(const ThetaSpec& spec, const Mag& sig_mag, double sig, double tol,
                          long cap, bool deriv) {
    double lg = std::log(sig);
    double target = std::log(tol) - std::log(64.0);
    long I = 8;
    auto term_log = [&](long i) {
        double m = spec.ell + static_cast<double>(spec.t) * i;
        double base = M_PI * std::sqrt(2.0 * m / 3.0) + i * lg;
        return deriv ? base + std::log(static_cast<double>(i) + 1.0) : base;
    };
    while (I < cap && !(term_log(I) <= target && term_log(I + 1) < term_log(I))) ++I;
    if (I >= cap)
        throw resource_limit_error("theta series: truncation order exceeds cap " +
                                   std::to_string(cap));

    for (int attempt = 0; attempt < 64; ++attempt) {
        Mag rho = series_ratio_bound(spec.t, spec.ell, I + 1, sig_mag);
        if (deriv) {
            // extra factor (i+1)/i <= (I+2)/(I+1)
            Real f(64);
            mpfr_set_si(f.raw(), I + 2, MPFR_RNDU);
            mpfr_div_si(f.raw(), f.raw(), I + 1, MPFR_RNDU);
            rho = rho * Mag::abs_of(f);
        }
        if (rho.below(15.0 / 16.0)) {
            Mag first = partition_bound(spec.ell + static_cast<long long>(spec.t) * (I + 1)) *
                        sig_mag.pow_ui_up(static_cast<unsigned long>(deriv ? I : I + 1));
            if (deriv) first = first * Mag::of_ui(static_cast<unsigned long>(I) + 1);
            Real one_minus(64);
            mpfr_ui_sub(one_minus.raw(), 1, rho.to_real(64).raw(), MPFR_RNDD);
            return {I, first.div_low(one_minus)};
        }
        I = I + I / 2 + 4;
        if (I >= cap)
            throw resource_limit_error("theta series: truncation order exceeds cap " +
                                       std::to_string(cap));
    }
    throw convergence_error("theta series: tail would not certify");
}

} // namespace

std::vector<long long> lattice_bucket_counts(unsigned t, unsigned ell, long jmax,
                                             const ThetaOptions& opt) {
    validate_spec({t, ell});
    double beta = beta_upper(t);
    double need = static_cast<double>(jmax) + static_cast<double>(ell) / t + 2.0;
    long R = static_cast<long>(std::ceil(beta + std::sqrt(beta * beta + 2.0 * need))) + 1;
    const LatticeCounts& lc = lattice_cache_for(t, R, opt.lattice_budget);
    if (jexact_bound(lc, ell) < jmax)
        throw error("theta lattice: internal radius selection too small");
    std::vector<long long> out(static_cast<size_t>(jmax) + 1, 0);
    for (long j = 0; j <= jmax; ++j) out[j] = lc.counts[ell][static_cast<size_t>(j)];
    return out;
}

Complex theta_lattice(const ThetaSpec& spec, const Complex& z, double tol,
                      const ThetaOptions& opt) {
    validate_spec(spec);
    if (!(tol > 0)) throw domain_error("theta_lattice: tol must be positive");
    mpfr_prec_t p = z.prec();
    if (z.is_exact_zero()) return theta_zero_arg(spec, p);
    double sig = sigma_upper_checked(z, "theta_lattice");
    Mag sig_mag = z.abs_upper();
    double beta = beta_upper(spec.t);

    // choose the first dropped bucket index X0, then certify rigorously
    double lg = std::log(sig);
    double target = std::log(tol) - std::log(64.0);
    auto term_log = [&](long x) {
        double u = beta + std::sqrt(beta * beta + 2.0 * x + 2.0);
        return (spec.t - 1) * std::log(2.0 * u + 1.0) + x * lg;
    };
    long X0 = 4;
    while (X0 < 40'000'000 && !(term_log(X0) <= target && term_log(X0 + 1) < term_log(X0)))
        ++X0;
    if (X0 >= 40'000'000)
        throw resource_limit_error("theta_lattice: |z| too close to 1 for the lattice form");

    Mag tail;
    bool ok = false;
    for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
        auto tm = lattice_tail_mag(spec.t, beta, sig_mag, X0);
        if (tm.has_value() && tm->below(tol * 0.5)) {
            tail = *tm;
            ok = true;
        } else {
            X0 += X0 / 2 + 8;
        }
    }
    if (!ok) throw convergence_error("theta_lattice: tail would not certify");

    double need = static_cast<double>(X0) + static_cast<double>(spec.ell) / spec.t + 2.0;
    long R = static_cast<long>(std::ceil(beta + std::sqrt(beta * beta + 2.0 * need))) + 1;
    const LatticeCounts& lc = lattice_cache_for(spec.t, R, opt.lattice_budget);
    if (jexact_bound(lc, spec.ell) < X0)
        throw error("theta_lattice: internal radius selection too small");

    const auto& counts = lc.counts[spec.ell];
    Complex acc(p);
    for (long j = X0; j >= 0; --j) {
        acc = acc * z;
        long long c = counts[static_cast<size_t>(j)];
        if (c != 0) acc = acc.add_int(Int(static_cast<long>(c)));
    }
    if (spec.ell != 0) acc = acc * z.pow_rat(Rat(static_cast<long>(spec.ell), static_cast<long>(spec.t)));
    acc.err += tail;
    return acc;
}

Complex theta_series_core(const ThetaSpec& spec, const Complex& z, double tol,
                          const ThetaOptions& opt) {
    validate_spec(spec);
    mpfr_prec_t p = z.prec();
    if (z.is_exact_zero()) {
        Complex r(p);
        return r.add_int(partition_number(spec.ell));
    }
    double sig = sigma_upper_checked(z, "theta_series_core");
    CoreTrunc tr = core_truncation(spec, z.abs_upper(), sig, tol, opt.series_cap, false);
    Complex acc(p);
    for (long i = tr.I; i >= 0; --i) {
        acc = acc * z;
        acc = acc.add_int(partition_number(spec.ell + spec.t * static_cast<unsigned>(i)));
    }
    acc.err += tr.tail;
    return acc;
}

Complex theta_series_core_deriv(const ThetaSpec& spec, const Complex& z, double tol,
                                const ThetaOptions& opt) {
    validate_spec(spec);
    mpfr_prec_t p = z.prec();
    double sig;
    if (z.is_exact_zero())
        sig = 0.0;
    else
        sig = sigma_upper_checked(z, "theta_series_core_deriv");
    CoreTrunc tr = core_truncation(spec, z.abs_upper(), std::max(sig, 1e-12), tol,
                                   opt.series_cap, true);
    Complex acc(p);
    for (long i = tr.I; i >= 1; --i) {
        acc = acc * z;
        Int c = partition_number(spec.ell + spec.t * static_cast<unsigned>(i)) * i;
        acc = acc.add_int(c);
    }
    acc.err += tr.tail;
    return acc;
}

Complex theta_partition(const ThetaSpec& spec, const Complex& z, double tol,
                        const ThetaOptions& opt) {
    validate_spec(spec);
    mpfr_prec_t p = z.prec();
    if (z.is_exact_zero()) return theta_zero_arg(spec, p);
    sigma_upper_checked(z, "theta_partition");
    Complex S = theta_series_core(spec, z, tol / 32.0, opt);
    Complex E = euler_inf(z, tol / 32.0);
    Complex pref = E.pow_int(static_cast<long>(spec.t));
    if (spec.ell != 0)
        pref = pref * z.pow_rat(Rat(static_cast<long>(spec.ell), static_cast<long>(spec.t)));
    return pref * S;
}

Complex theta_roots_of_unity(const ThetaSpec& spec, const Complex& z, double tol,
                             const ThetaOptions&) {
    validate_spec(spec);
    mpfr_prec_t p = z.prec();
    if (z.is_exact_zero()) return theta_zero_arg(spec, p);
    sigma_upper_checked(z, "theta_roots_of_unity");
    double tol_e = tol / (8.0 * (spec.t + 2));
    Complex E = euler_inf(z, tol_e);
    Complex Et = E.pow_int(static_cast<long>(spec.t));
    Complex z1t = z.pow_rat(Rat(1, static_cast<long>(spec.t)));
    Complex acc(p);
    for (unsigned j = 0; j < spec.t; ++j) {
        Complex xj = z1t * Complex::cis_2pi(Int(static_cast<long>(j)), Int(static_cast<long>(spec.t)), p);
        Complex phij = euler_inf(xj, tol_e);
        Complex rot = Complex::cis_2pi(Int(-static_cast<long>(j) * static_cast<long>(spec.ell)),
                                       Int(static_cast<long>(spec.t)), p);
        acc = acc + rot * (Et / phij);
    }
    return acc.mul_real(Real::of(Rat(1, static_cast<long>(spec.t)), p));
}

Complex theta_eval(const ThetaSpec& spec, const Complex& z, double tol, ThetaForm form,
                   const ThetaOptions& opt) {
    switch (form) {
        case ThetaForm::lattice: return theta_lattice(spec, z, tol, opt);
        case ThetaForm::partition: return theta_partition(spec, z, tol, opt);
        case ThetaForm::roots_of_unity: return theta_roots_of_unity(spec, z, tol, opt);
    }
    throw domain_error("theta_eval: unknown form");
}

} // namespace hookpoly
