#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hookpoly/partitions.hpp"
#include "hookpoly/qseries.hpp"

using namespace hookpoly;

namespace {

// t-fold convolution of the partition numbers: the number of t-tuples of
// partitions with total size k (the "t-colored" count p^{(t)}(k))
std::vector<Int> colored_counts(unsigned t, unsigned kmax) {
    auto p = partition_numbers(kmax);
    std::vector<Int> acc(kmax + 1, 0);
    acc[0] = 1;
    for (unsigned rep = 0; rep < t; ++rep) {
        std::vector<Int> next(kmax + 1, 0);
        for (unsigned i = 0; i <= kmax; ++i) {
            if (acc[i] == 0) continue;
            for (unsigned j = 0; i + j <= kmax; ++j) next[i + j] += acc[i] * p[j];
        }
        acc = std::move(next);
    }
    return acc;
}

// t-core counts by direct enumeration (no generating functions involved)
Int brute_core_count(unsigned t, unsigned n) {
    Int count = 0;
    for_each_partition(n, [&](const Partition& lam) {
        if (count_t_hooks(lam, t) == 0) ++count;
    });
    return count;
}

bool superdistinct(const Partition& lam, unsigned min_part) {
    if (!lam.empty() && lam.back() < min_part) return false;
    for (size_t i = 0; i + 1 < lam.size(); ++i)
        if (lam[i] - lam[i + 1] < 2) return false;
    return true;
}

}  // namespace

TEST_CASE("product expansion matches brute force for the hook families") {
    for (unsigned t : {1u, 2u, 3u, 7u}) {
        auto ht = expand_Ht(t, 18);
        for (unsigned n = 0; n <= 18; ++n) CHECK(ht[n] == brute_force_Pt(t, n));
    }
}

TEST_CASE("parts expansion matches brute force") {
    auto qn = expand_Qn(16);
    for (unsigned n = 0; n <= 16; ++n) CHECK(qn[n] == brute_force_Qn(n));
}

TEST_CASE("core-quotient identity: coefficient of w^k is p^(t)(k) c_t(n-tk)") {
    // independent route: hook-free counts by enumeration, colored counts by
    // convolving the pentagonal-recurrence table
    for (unsigned t : {3u, 7u}) {
        unsigned N = 25;
        auto ht = expand_Ht(t, N);
        auto colored = colored_counts(t, N / t);
        for (unsigned n = 10; n <= N; n += 5) {
            WPoly expect;
            for (unsigned k = 0; t * k <= n; ++k)
                expect.add_term(k, colored[k] * brute_core_count(t, n - t * k));
            CHECK(ht[n] == expect);
        }
    }
}

TEST_CASE("t-core expansion equals the w = 0 specialization") {
    for (unsigned t : {2u, 3u, 5u, 7u}) {
        auto cores = expand_tcore(t, 60);
        auto ht = expand_Ht(t, 60);
        for (unsigned n = 0; n <= 60; ++n) CHECK(cores[n] == ht[n].coeff(0));
    }
    auto c7 = expand_tcore(7, 7);
    CHECK(c7 == std::vector<Int>{1, 1, 2, 3, 5, 7, 11, 8});
}

TEST_CASE("deformed family counts superdistinct partitions by number of parts") {
    // sum side: q^{m^2} w^m / (q;q)_m generates partitions into parts pairwise
    // differing by >= 2; the b = 1 shift forces parts >= 2
    auto e0 = expand_pab(Rat(1), Rat(0), Rat(24));
    auto e1 = expand_pab(Rat(1), Rat(1), Rat(24));
    for (unsigned n = 0; n <= 24; ++n) {
        WPoly want0, want1;
        for_each_partition(n, [&](const Partition& lam) {
            if (superdistinct(lam, 1)) want0.add_term(lam.size(), 1);
            if (superdistinct(lam, 2)) want1.add_term(lam.size(), 1);
        });
        CHECK(e0.at(Rat(n)) == want0);
        CHECK(e1.at(Rat(n)) == want1);
    }
}

TEST_CASE("deformed family handles rational exponent grids") {
    // a = 1/3, b = 2/7: the exponent grid has denominator 21
    auto ex = expand_pab(Rat(1, 3), Rat(2, 7), Rat(10));
    CHECK(ex.delta == 21);
    // m = 1 contributes q^(1/3 + 2/7) w / (q;q)_1: lowest term at n = 13/21
    const WPoly& low = ex.at(Rat(13, 21));
    CHECK(low == WPoly::monomial(1, 1));
    // the next rung up from (q;q)_1^{-1} = 1 + q + q^2 + ...
    CHECK(ex.at(Rat(13, 21) + 1) == WPoly::monomial(1, 1));
    // empty on-grid slots are the zero polynomial
    CHECK(ex.at(Rat(1, 21)).is_zero());
    // off-grid and out-of-range access fail loudly
    CHECK_THROWS_AS(ex.at(Rat(1, 2)), grid_error);
    CHECK_THROWS_AS(ex.at(Rat(11)), grid_error);
}

TEST_CASE("deformed family rejects bad parameters") {
    CHECK_THROWS_AS(expand_pab(Rat(0), Rat(1), Rat(10)), domain_error);
    CHECK_THROWS_AS(expand_pab(Rat(-1, 2), Rat(0), Rat(10)), domain_error);
    // mcap: a tiny a makes the m-range explode past the cap
    CHECK_THROWS_AS(expand_pab(Rat(1), Rat(0), Rat(5000), 10), resource_limit_error);
}

TEST_CASE("series grid arithmetic stays exact") {
    QSeries s = QSeries::unit(2, 20);
    // divide by (1 + q^(1/2)) then multiply it back in
    s.mul_factor(1, Rat(1, 2), 0, -1);
    s.mul_factor(1, Rat(1, 2), 0, +1);
    for (long e = 0; e <= 20; ++e) {
        if (e == 0)
            CHECK(s.at_index(e) == WPoly::constant(1));
        else
            CHECK(s.at_index(e).is_zero());
    }
    CHECK_THROWS_AS(s.at_rat(Rat(1, 3)), grid_error);
    CHECK_THROWS_AS(s.mul_factor(1, Rat(0), 0, -1), grid_error);
}
