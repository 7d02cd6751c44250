#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "hookpoly/atfn.hpp"
#include "hookpoly/dedekind.hpp"
#include "hookpoly/euler.hpp"
#include "hookpoly/partitions.hpp"
#include "hookpoly/theta.hpp"

using namespace hookpoly;

namespace {

// direct sawtooth-sum definition; the library evaluates via reciprocity
Rat sawtooth_dedekind(long h, long k) {
    Rat s(0);
    for (long r = 1; r < k; ++r) {
        // ((x)) = x - floor(x) - 1/2 away from integers; hr/k is never
        // integral here because gcd(h,k) = 1 and 0 < r < k
        Rat x(r, k);
        x.canonicalize();
        Rat y(h * r, k);
        y.canonicalize();
        Rat fx = x - x.get_num() / x.get_den() - Rat(1, 2);
        Rat fy = y - y.get_num() / y.get_den() - Rat(1, 2);
        s += fx * fy;
    }
    return s;
}

double dist(const Complex& a, const Complex& b) {
    return (a - b).abs_upper().to_double_up();
}

}  // namespace

TEST_CASE("reciprocity evaluation matches the sawtooth sum") {
    for (long k = 1; k <= 40; ++k)
        for (long h = 0; h < k; ++h) {
            if (std::gcd(h, k) != 1 && k > 1) continue;
            CHECK(dedekind_sum(Int(h), Int(k)) == sawtooth_dedekind(h, k));
        }
    // closed form s(1,k) = (k-1)(k-2)/12k
    for (long k = 1; k <= 50; ++k) {
        Rat want((k - 1) * (k - 2), 12 * k);
        want.canonicalize();
        CHECK(dedekind_sum(Int(1), Int(k)) == want);
    }
    // s(-h,k) = -s(h,k)
    CHECK(dedekind_sum(Int(-5), Int(12)) == -dedekind_sum(Int(5), Int(12)));
    CHECK_THROWS_AS(dedekind_sum(Int(2), Int(4)), domain_error);
    CHECK_THROWS_AS(dedekind_sum(Int(1), Int(0)), domain_error);
}

TEST_CASE("multiplier phases are consistent between forms") {
    for (unsigned t : {6u, 7u})
        for (long k : {1L, 2L, 5L, 12L, 13L}) {
            if (std::gcd(k, static_cast<long>(t)) != 1) continue;
            for (long h = 0; h < k; ++h) {
                if (k > 1 && std::gcd(h, k) != 1) continue;
                Rat ph = omega_prime_phase(Int(h), Int(k), t);
                Complex direct = omega_prime(Int(h), Int(k), t, 192);
                Complex from_phase = Complex::cis_pi(ph, 192);
                CHECK(dist(direct, from_phase) < 1e-45);
            }
        }
}

TEST_CASE("euler product inverts the partition generating series") {
    auto p = partition_numbers(260);
    for (auto [re, im] : {std::pair{0.5, 0.0}, {0.3, 0.4}, {-0.45, 0.2}, {0.0, -0.55}}) {
        Complex a = Complex(Real::of(re, 192), Real::of(im, 192));
        Complex prod = euler_inf(a, 1e-35);
        Complex recip(192);
        for (size_t n = 261; n-- > 0;) recip = recip * a + Complex::of_int(p[n], 192);
        // tail of the series at |a| <= 0.55 and n > 260 is far below 1e-25
        CHECK(dist(prod * recip, Complex::one(192)) < 1e-25);
    }
}

TEST_CASE("euler product matches its pentagonal-number expansion") {
    Complex a = Complex(Real::of(0.4, 192), Real::of(0.1, 192));
    Complex sum = Complex::one(192);
    for (long k = 1; k * (3 * k - 1) / 2 <= 400; ++k) {
        Complex p1 = a.pow_int(k * (3 * k - 1) / 2);
        Complex p2 = a.pow_int(k * (3 * k + 1) / 2);
        Complex term = p1 + p2;
        sum = (k % 2) ? sum - term : sum + term;
    }
    CHECK(dist(euler_inf(a, 1e-40), sum) < 1e-35);
}

TEST_CASE("euler product rejects the unit circle") {
    CHECK_THROWS_AS(euler_inf(Complex(Real::of(1.0, 64), Real(64)), 1e-10), domain_error);
    CHECK_THROWS_AS(euler_inf(Complex(Real::of(0.9999999, 64), Real(64)), 1e-10), domain_error);
}

TEST_CASE("lattice point counts reproduce the series convolution") {
    // bucket j of the lattice enumeration must equal the coefficient of z^j in
    // (z)_inf^t * sum_i p(ell + t i) z^i, an exact integer identity
    const long jmax = 24;
    auto p = partition_numbers(3 * jmax + 3);
    for (unsigned t : {2u, 3u}) {
        // (z)_inf^t by repeated pentagonal multiplication
        std::vector<Int> eta{1};
        for (unsigned rep = 0; rep < t; ++rep) {
            std::vector<Int> next(jmax + 1, 0);
            for (long i = 0; i <= jmax && i < static_cast<long>(eta.size()); ++i) {
                if (eta[i] == 0) continue;
                next[i] += eta[i];
                for (long k = 1;; ++k) {
                    long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
                    if (i + g1 > jmax) break;
                    Int sgn = (k % 2) ? -1 : 1;
                    next[i + g1] += sgn * eta[i];
                    if (i + g2 <= jmax) next[i + g2] += sgn * eta[i];
                }
            }
            eta = std::move(next);
        }
        for (unsigned ell = 0; ell < t; ++ell) {
            auto counts = lattice_bucket_counts(t, ell, jmax);
            REQUIRE(counts.size() >= static_cast<size_t>(jmax + 1));
            for (long j = 0; j <= jmax; ++j) {
                Int want = 0;
                for (long i = 0; i <= j; ++i) want += eta[j - i] * p[ell + t * i];
                CHECK(Int(static_cast<long>(counts[j])) == want);
            }
        }
    }
}

TEST_CASE("three theta forms agree as balls") {
    for (unsigned t : {2u, 3u}) {
        for (unsigned ell = 0; ell < t; ++ell) {
            ThetaSpec spec{t, ell};
            for (auto [re, im] : {std::pair{0.3, 0.0}, {-0.2, 0.3}, {0.0, 0.45}}) {
                Complex z = Complex(Real::of(re, 128), Real::of(im, 128));
                Complex f1 = theta_lattice(spec, z, 1e-22);
                Complex f2 = theta_partition(spec, z, 1e-22);
                Complex f3 = theta_roots_of_unity(spec, z, 1e-22);
                // each pair of balls must overlap (they contain the same value)
                CHECK((f1 - f2).abs_lower().is_zero());
                CHECK((f2 - f3).abs_lower().is_zero());
                CHECK((f1 - f3).abs_lower().is_zero());
                CHECK(f1.err.to_double_up() < 1e-20);
                CHECK(f2.err.to_double_up() < 1e-20);
                CHECK(f3.err.to_double_up() < 1e-20);
            }
        }
    }
}

TEST_CASE("theta at a pinned reference point") {
    ThetaSpec spec{7, 5};
    Complex z = Complex::of(Rat(1, 3), Rat(0), 256);
    Complex v = theta_partition(spec, z, 1e-42);
    Real ref = Real::parse("13.822114329538418468631634882789475267995723637837", 256);
    CHECK((v.re - ref).abs().to_double() < 1e-38);
    CHECK(v.im.abs().to_double() < 1e-38);
    CHECK(v.err.to_double_up() < 1e-40);
    // the same number through the roots-of-unity form
    Complex u = theta_roots_of_unity(spec, z, 1e-42);
    CHECK((u.re - ref).abs().to_double() < 1e-38);
}

TEST_CASE("theta tends to its constant term near the origin") {
    ThetaSpec spec{3, 0};
    Complex z = Complex(Real::of(1e-4, 128), Real(128));
    Complex v = theta_partition(spec, z, 1e-25);
    CHECK((v - Complex::one(128)).abs_upper().to_double_up() < 0.01);
}

TEST_CASE("theta rejects bad domains") {
    ThetaSpec spec{3, 1};
    CHECK_THROWS_AS(theta_partition(spec, Complex(Real::of(1.2, 128), Real(128)), 1e-20),
                    domain_error);
    CHECK_THROWS_AS(theta_partition(ThetaSpec{3, 5}, Complex(Real::of(0.3, 128), Real(128)),
                                    1e-20),
                    domain_error);
}

TEST_CASE("truncated Kloosterman-type sum matches a direct transcription") {
    const unsigned t = 6;
    const long K = 20, n = 10;
    const mpfr_prec_t prec = 192;
    Complex naive(prec);
    for (long k = 1; k <= K; ++k) {
        if (std::gcd(k, static_cast<long>(t)) != 1) continue;
        Rat kexp(1 - static_cast<long>(t), 2);
        kexp.canonicalize();
        Real kfac = Real::pow_rat(Real::of(k, prec), kexp);
        long h_hi = (k == 1) ? 0 : k - 1;
        for (long h = (k == 1) ? 0 : 1; h <= h_hi; ++h) {
            if (k > 1 && std::gcd(h, k) != 1) continue;
            Complex phase = Complex::cis_2pi(Int(-h * n), Int(k), prec);
            Complex om = omega_prime(Int(h), Int(k), t, prec);
            naive = naive + (phase * om).mul_real(kfac);
        }
    }
    auto lib = eval_At_truncated(t, Complex(prec), {n}, K, prec);
    REQUIRE(lib.size() == 1);
    CHECK((lib[0].re - naive.re).abs().to_double() < 1e-40);
    CHECK((lib[0].im - naive.im).abs().to_double() < 1e-40);
}

TEST_CASE("tail control for the convergent sum") {
    Complex zero(64);
    // the bound shrinks with K and the required K responds to tol
    CHECK(At_tail_bound(7, zero, 800).to_double_up() <
          At_tail_bound(7, zero, 400).to_double_up());
    CHECK(At_tail_bound(7, zero, 800).to_double_up() < 2e-3);
    long k1 = At_required_K(7, zero, 2e-3);
    CHECK(k1 >= 1);
    CHECK(At_tail_bound(7, zero, k1).to_double_up() <= 2e-3 * 1.0001);
    // a certified 1e-10 tail is out of reach at every t in range: the honest
    // resource refusal is part of the contract
    for (unsigned t : {6u, 7u, 8u})
        CHECK_THROWS_AS(At_required_K(t, zero, 1e-10), resource_limit_error);
    CHECK_THROWS_AS(eval_At(7, zero, 100, 1e-10, 192), resource_limit_error);
    CHECK_THROWS_AS(eval_At(5, zero, 100, 1e-3, 192), domain_error);
    // |w| beyond the configured disc is refused
    Complex big(Real::of(0.2, 64), Real(64));
    CHECK_THROWS_AS(eval_At(7, big, 100, 1e-3, 192), domain_error);
}

TEST_CASE("sum values sit where the classical bounds put them") {
    // real (the h <-> k-h terms conjugate-pair) and near 1 at w = 0
    Complex zero(192);
    auto vals = eval_At_batch(7, zero, {20, 60, 100}, 2e-3, 192);
    for (const auto& v : vals) {
        CHECK(v.im.abs().to_double() < 1e-30);
        CHECK(v.re.to_double() > 0.05);
        CHECK(v.re.to_double() < 2.62);
    }
}
