// Acceptance gate. Each invocation runs one numbered criterion and prints a
// single verdict line "ACCEPTANCE <k> PASS|FAIL[: reason]" (diagnostics may
// precede it). Exit status 0 on PASS, 1 on FAIL. Tolerances are pinned here
// on purpose: they are the contract, not knobs.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hookpoly/asymptotics.hpp"
#include "hookpoly/atfn.hpp"
#include "hookpoly/partitions.hpp"
#include "hookpoly/qseries.hpp"
#include "hookpoly/roots.hpp"
#include "hookpoly/theta.hpp"
#include "hookpoly/thetazeros.hpp"

using namespace hookpoly;

namespace {

int verdict(int k, bool pass, const std::string& reason = "") {
    if (pass)
        std::printf("ACCEPTANCE %d PASS\n", k);
    else
        std::printf("ACCEPTANCE %d FAIL%s%s\n", k, reason.empty() ? "" : ": ",
                    reason.c_str());
    return pass ? 0 : 1;
}

std::vector<Int> coeff_vec(const WPoly& p) {
    std::vector<Int> c;
    if (p.degree())
        for (unsigned k = 0; k <= *p.degree(); ++k) c.push_back(p.coeff(k));
    return c;
}

// ---------------------------------------------------------------- criterion 1
int c01() {
    for (unsigned t = 1; t <= 8; ++t) {
        auto ht = expand_Ht(t, 30);
        for (unsigned n = 0; n <= 30; ++n)
            if (!(ht[n] == brute_force_Pt(t, n)))
                return verdict(1, false,
                               "hook mismatch at t=" + std::to_string(t) +
                                   " n=" + std::to_string(n));
    }
    auto qn = expand_Qn(25);
    for (unsigned n = 0; n <= 25; ++n)
        if (!(qn[n] == brute_force_Qn(n)))
            return verdict(1, false, "parts mismatch at n=" + std::to_string(n));
    return verdict(1, true);
}

// ---------------------------------------------------------------- criterion 2
int c02() {
    auto p = partition_numbers(300);
    for (unsigned t = 1; t <= 10; ++t) {
        auto ht = expand_Ht(t, 300);
        auto cores = expand_tcore(t, 300);
        for (unsigned n = 0; n <= 300; ++n) {
            if (ht[n].eval_int(1) != p[n])
                return verdict(2, false,
                               "w=1 specialization broke at t=" + std::to_string(t) +
                                   " n=" + std::to_string(n));
            if (ht[n].coeff(0) != cores[n])
                return verdict(2, false,
                               "w=0 specialization broke at t=" + std::to_string(t) +
                                   " n=" + std::to_string(n));
        }
    }
    // gap structure of the 2- and 3-core counts on n <= 100:
    // c_2(n) = 1 exactly at the triangular numbers, else 0
    auto c2 = expand_tcore(2, 100);
    for (unsigned n = 0; n <= 100; ++n) {
        bool tri = false;
        for (unsigned k = 0; k * (k + 1) / 2 <= n; ++k)
            if (k * (k + 1) / 2 == n) tri = true;
        if (c2[n] != (tri ? 1 : 0))
            return verdict(2, false, "c_2 gap structure broke at n=" + std::to_string(n));
    }
    // c_3(n) counts divisors of 3n+1 by residue class mod 3
    auto c3 = expand_tcore(3, 100);
    for (unsigned n = 0; n <= 100; ++n) {
        long want = 0, m = 3L * n + 1;
        for (long d = 1; d <= m; ++d)
            if (m % d == 0) want += (d % 3 == 1) ? 1 : (d % 3 == 2) ? -1 : 0;
        if (c3[n] != want)
            return verdict(2, false, "c_3 gap structure broke at n=" + std::to_string(n));
    }
    return verdict(2, true);
}

// ---------------------------------------------------------------- criterion 3
int c03() {
    auto ex = expand_pab(Rat(1, 3), Rat(2, 7), Rat(7114, 21));
    WPoly want;
    want.add_term(26, Int("281936495"));
    want.add_term(19, Int("567030825181"));
    want.add_term(5, Int("4450838"));
    bool ok = ex.at(Rat(7114, 21)) == want;
    return verdict(3, ok, ok ? "" : "deformed polynomial at n=7114/21 is wrong");
}

// ---------------------------------------------------------------- criterion 4
int c04() {
    struct Pin {
        long n;
        unsigned degree;
        double max_modulus_root;
    };
    const Pin pins[] = {{1000, 31, -4936.858637}, {5000, 70, -485377.8433}};
    for (const Pin& pin : pins) {
        auto ex = expand_pab(Rat(1), Rat(0), Rat(pin.n));
        const WPoly& poly = ex.at(Rat(pin.n));
        if (!poly.degree() || *poly.degree() != pin.degree)
            return verdict(4, false, "degree wrong at n=" + std::to_string(pin.n));
        auto roots = solve_roots(poly);
        // roots are sorted by modulus: the extreme one is last
        const Complex& big = roots.roots.back();
        double re = big.re.to_double(), im = big.im.to_double();
        double rel = std::hypot(re - pin.max_modulus_root, im) /
                     std::fabs(pin.max_modulus_root);
        std::printf("n=%ld max-modulus root %.10g + %.2gi (relative offset %.2e)\n", pin.n,
                    re, im, rel);
        if (rel > 1e-6)
            return verdict(4, false, "max-modulus root off at n=" + std::to_string(pin.n));
    }
    return verdict(4, true);
}

// ---------------------------------------------------------------- criterion 5
int c05() {
    const double tol = 1e-20;
    for (unsigned t : {2u, 3u, 5u, 7u}) {
        for (unsigned ell = 0; ell < t; ++ell) {
            ThetaSpec spec{t, ell};
            // 20 sample points: five radii, four directions off the cut
            int checked = 0;
            for (double r : {0.12, 0.25, 0.36, 0.45, 0.55}) {
                for (auto [cx, cy] : {std::pair{1.0, 0.0},
                                      {-0.62, 0.55},
                                      {0.1, -0.87},
                                      {-0.3, -0.7}}) {
                    Complex z(Real::of(r * cx, 128), Real::of(r * cy, 128));
                    Complex f1 = theta_lattice(spec, z, tol);
                    Complex f2 = theta_partition(spec, z, tol);
                    Complex f3 = theta_roots_of_unity(spec, z, tol);
                    bool agree = (f1 - f2).abs_lower().is_zero() &&
                                 (f2 - f3).abs_lower().is_zero() &&
                                 (f1 - f3).abs_lower().is_zero();
                    double worst_err = std::max(
                        {f1.err.to_double_up(), f2.err.to_double_up(),
                         f3.err.to_double_up()});
                    if (!agree || worst_err > 1e-18)
                        return verdict(
                            5, false,
                            "forms disagree at t=" + std::to_string(t) +
                                " ell=" + std::to_string(ell) + " r=" + std::to_string(r));
                    ++checked;
                }
            }
            if (checked != 20) return verdict(5, false, "sample underrun");
        }
    }
    return verdict(5, true);
}

// ---------------------------------------------------------------- criterion 6
int c06() {
    // Contract: eval_At(t, 0, n) real and inside (0.05, 2.62) with certified
    // err < 1e-10, for t in {6,7,8} and ten n <= 200. The tail bound behind
    // eval_At is C (2/(t-5)) K^{-(t-5)/2}; pushing it under 1e-10 needs K far
    // beyond any feasible truncation for these t, so the evaluator refuses.
    // The criterion is therefore reported as an honest FAIL, with the interval
    // check rerun at the tightest feasible tolerance as a diagnostic.
    std::vector<long> ns;
    for (long n = 20; n <= 200; n += 20) ns.push_back(n);

    bool certified_ok = true;
    std::string refusal;
    for (unsigned t : {6u, 7u, 8u}) {
        try {
            long K = At_required_K(t, Complex(64), 1e-10);
            std::printf("t=%u: required K=%ld within cap\n", t, K);
        } catch (const resource_limit_error& e) {
            certified_ok = false;
            if (!refusal.empty()) refusal += "; ";
            refusal += "t=" + std::to_string(t) + ": " + e.what();
        }
    }

    bool interval_ok = true;
    std::string tols;
    for (unsigned t : {6u, 7u, 8u}) {
        // diagnostic tolerance for this t: twice the tail bound at a
        // truncation that keeps the k-sum affordable (the h-sums make the
        // cost quadratic in the truncation)
        long K_diag = t == 6 ? 4000 : (t == 7 ? 2000 : 1000);
        double feasible_tol =
            2.0 * At_tail_bound(t, Complex(192), K_diag).to_double_up();
        if (!tols.empty()) tols += ", ";
        char buf[64];
        std::snprintf(buf, sizeof buf, "t=%u: %.1e", t, feasible_tol);
        tols += buf;
        auto vals = eval_At_batch(t, Complex(192), ns, feasible_tol, 192);
        for (size_t i = 0; i < ns.size(); ++i) {
            const Complex& v = vals[i];
            double re = v.re.to_double();
            double im = v.im.abs().to_double();
            double err = v.err.to_double_up();
            bool ok = im < 1e-30 && re - err > 0.05 && re + err < 2.62;
            if (!ok) {
                interval_ok = false;
                std::printf("t=%u n=%ld: value %.6f + %.1ei (err %.1e) escapes (0.05,2.62)\n",
                            t, ns[i], re, v.im.to_double(), err);
            }
        }
        std::printf("t=%u diagnostic at tol %.1e done\n", t, feasible_tol);
    }
    std::printf("interval membership %s for all 30 samples (%s)\n",
                interval_ok ? "holds" : "violated", tols.c_str());

    if (!certified_ok)
        return verdict(6, false,
                       "err < 1e-10 unattainable (" + refusal +
                           "); values verified real in (0.05, 2.62) at feasible tolerances (" +
                           tols + ")");
    return verdict(6, interval_ok, interval_ok ? "" : "interval membership violated");
}

// criteria 7/8 share the small-|w| grid ------------------------------------
int small_w_trend(int crit, const Complex& w, double final_tol) {
    std::vector<long> ns = {100, 178, 316, 562, 1000};
    RatioOptions opt;
    opt.at_tol = 2e-3;  // certified 1e-10 tails are refused; see criterion 6
    auto rep = ratio_report(7, 0, w, ns, opt);
    if (rep.entries.size() != ns.size()) return verdict(crit, false, "entry underrun");
    double prev = 0;
    bool decreasing = true;
    for (size_t i = 0; i < rep.entries.size(); ++i) {
        double dev = std::fabs(rep.entries[i].ratio.to_double() - 1.0);
        std::printf("n=%ld |ratio-1| = %.6f\n", rep.entries[i].n, dev);
        if (i > 0 && dev >= prev) decreasing = false;
        prev = dev;
    }
    double last = std::fabs(rep.entries.back().ratio.to_double() - 1.0);
    if (last >= final_tol)
        return verdict(crit, false, "final deviation " + std::to_string(last) + " too large");
    if (!decreasing) return verdict(crit, false, "deviation not decreasing along the grid");
    return verdict(crit, true);
}

int c07() { return small_w_trend(7, Complex(192), 0.10); }

int c08() { return small_w_trend(8, Complex::of(Rat(1, 20), Rat(0), 192), 0.15); }

// ---------------------------------------------------------------- criterion 9
int c09() {
    // large regime: t = 7, w = 3, n = 5 (mod 7), endpoints 425 and 1104
    std::vector<long> ns = {425, 530, 642, 747, 845, 964, 1104};
    auto rep = ratio_report(7, 5, Complex::of(Rat(3), Rat(0), 192), ns);
    double first = 0, last = 0;
    for (const auto& e : rep.entries) {
        double dev = std::fabs(e.ratio.to_double() - 1.0);
        std::printf("n=%ld ratio = %.6f |ratio-1| = %.6f\n", e.n, e.ratio.to_double(), dev);
        if (e.n == 425) first = dev;
        if (e.n == 1104) last = dev;
    }

    // independent consistency oracle: at t = 1 the main term is the classical
    // partition asymptotic, and the ratio must already sit within 5% by n=2000
    auto oracle = ratio_report(1, 0, Complex::of(Rat(2), Rat(0), 192), {2000});
    double odev = std::fabs(oracle.entries.at(0).ratio.to_double() - 1.0);
    std::printf("t=1 oracle at n=2000: |ratio-1| = %.6f\n", odev);
    if (odev >= 0.05) return verdict(9, false, "t=1 closed-form oracle out of tolerance");

    if (last >= first)
        return verdict(9, false, "|ratio-1| did not shrink from n=425 to n=1104");
    if (last >= 0.25)
        return verdict(
            9, false,
            "trend holds (" + std::to_string(first) + " -> " + std::to_string(last) +
                ") but |ratio-1| at n=1104 misses the 0.25 bar; the o(1) decay in this "
                "direction is ~n^{-1/4} and reaches 0.25 only near n~10^4");
    return verdict(9, true);
}

// --------------------------------------------------------------- criterion 10
int c10() {
    const double eps = 0.5, w0 = 0.01;
    auto zeros = theta_zeros(ThetaSpec{7, 5}, eps);
    std::printf("theta zeros located: %zu\n", zeros.zeros.size());

    auto ht = expand_Ht(7, 845);
    size_t prev_violations = 0;
    for (long n : {425L, 845L}) {
        auto roots = solve_roots(ht[static_cast<size_t>(n)]);
        auto v = classify_localization(roots, zeros.zeros, 7, 5, n, eps, w0);
        size_t nonzero =
            v.annulus_roots.size() + v.theta_neighborhood_roots.size() + v.violations.size();
        double frac =
            nonzero ? 1.0 - static_cast<double>(v.violations.size()) / nonzero : 1.0;
        std::printf("n=%ld: %zu annulus + %zu near-theta + %zu violations (%.1f%% located)\n",
                    n, v.annulus_roots.size(), v.theta_neighborhood_roots.size(),
                    v.violations.size(), 100.0 * frac);
        if (n == 425 && frac < 0.95)
            return verdict(10, false, "located fraction below 95% at n=425");
        if (n == 845 && v.violations.size() > prev_violations)
            return verdict(10, false, "violation count grew from n=425 to n=845");
        prev_violations = v.violations.size();
    }
    return verdict(10, true);
}

// --------------------------------------------------------------- criterion 11
int c11() {
    for (int b : {0, 1}) {
        auto scan = rr_claim_scan(b, 400, 1e-8, {}, 4);
        std::printf("b=%d: %ld polynomials solved, worst Re = %.3e at n=%ld\n", b,
                    scan.solved, scan.worst_re, scan.worst_n);
        if (!scan.pass)
            return verdict(11, false,
                           "real-part bound broken at b=" + std::to_string(b) +
                               " n=" + std::to_string(scan.worst_n));
    }
    return verdict(11, true);
}

// --------------------------------------------------------------- criterion 12
int c12() {
    double worst = 0;
    auto absorb = [&worst](double v) {
        if (v > worst) worst = v;
    };

    // the two deformed polynomials from criterion 4
    for (long n : {1000L, 5000L}) {
        auto ex = expand_pab(Rat(1), Rat(0), Rat(n));
        auto c = coeff_vec(ex.at(Rat(n)));
        auto r = solve_roots(c);
        absorb(vieta_max_rel_dev(c, r));
        absorb(reconstruct_max_rel_dev(c, r));
    }
    // the two hook polynomials from criterion 10
    auto ht = expand_Ht(7, 845);
    for (long n : {425L, 845L}) {
        auto c = coeff_vec(ht[static_cast<size_t>(n)]);
        auto r = solve_roots(c);
        absorb(vieta_max_rel_dev(c, r));
        absorb(reconstruct_max_rel_dev(c, r));
    }
    // every polynomial the criterion-11 scans solve
    for (int b : {0, 1}) {
        auto scan = rr_claim_scan(b, 400, 1e-8, {}, 4);
        absorb(scan.worst_vieta);
        absorb(scan.worst_recon);
    }
    std::printf("worst certification deviation: %.3e\n", worst);
    return verdict(12, worst < 1e-10,
                   worst < 1e-10 ? "" : "certification deviation above 1e-10");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: acceptance <criterion 1..12>\n");
        return 2;
    }
    int k = std::atoi(argv[1]);
    try {
        switch (k) {
            case 1: return c01();
            case 2: return c02();
            case 3: return c03();
            case 4: return c04();
            case 5: return c05();
            case 6: return c06();
            case 7: return c07();
            case 8: return c08();
            case 9: return c09();
            case 10: return c10();
            case 11: return c11();
            case 12: return c12();
            default:
                std::fprintf(stderr, "usage: acceptance <criterion 1..12>\n");
                return 2;
        }
    } catch (const std::exception& e) {
        return verdict(k, false, std::string("unexpected exception: ") + e.what());
    }
}
