#include "hookpoly/qseries.hpp"

#include "hookpoly/errors.hpp"

namespace hookpoly {

QSeries::QSeries(long delta, long emax) : delta_(delta), emax_(emax) {
    if (delta < 1) throw grid_error("QSeries: grid denominator must be >= 1");
    if (emax < 0) throw grid_error("QSeries: negative truncation");
    c_.resize(static_cast<size_t>(emax) + 1);
}

QSeries QSeries::unit(long delta, long emax) {
    QSeries s(delta, emax);
    s.c_[0] = WPoly::constant(1);
    return s;
}

const WPoly& QSeries::at_index(long e) const {
    if (e < 0 || e > emax_)
        throw grid_error("QSeries: exponent index " + std::to_string(e) +
                         " outside truncation range [0, " + std::to_string(emax_) + "]");
    return c_[static_cast<size_t>(e)];
}

const WPoly& QSeries::at_rat(const Rat& n) const {
    Rat scaled = n * delta_;
    if (scaled.get_den() != 1)
        throw grid_error("QSeries: exponent " + n.get_str() + " is off the 1/" +
                         std::to_string(delta_) + " grid");
    if (!scaled.get_num().fits_slong_p())
        throw grid_error("QSeries: exponent " + n.get_str() + " out of range");
    return at_index(scaled.get_num().get_si());
}

WPoly& QSeries::mutable_at(long e) {
    if (e < 0 || e > emax_) throw grid_error("QSeries: index outside truncation range");
    return c_[static_cast<size_t>(e)];
}

void QSeries::mul_factor(const Int& c, const Rat& e, unsigned d, int sign) {
    Rat scaled = e * delta_;
    if (scaled.get_den() != 1)
        throw grid_error("mul_factor: exponent " + e.get_str() + " off the 1/" +
                         std::to_string(delta_) + " grid");
    if (scaled.get_num() <= 0) throw grid_error("mul_factor: exponent must be positive");
    if (!scaled.get_num().fits_slong_p()) throw grid_error("mul_factor: exponent out of range");
    long ei = scaled.get_num().get_si();
    if (sign != 1 && sign != -1) throw domain_error("mul_factor: sign must be +1 or -1");
    if (ei > emax_) return;  // factor is 1 + O(q^{>trunc}): no effect at this order

    if (sign == +1) {
        // r[m] = s[m] + c w^d s[m-e], descending so the reads see the original
        for (long m = emax_; m >= ei; --m)
            c_[m].add_scaled_shifted(c_[m - ei], d, c);
    } else {
        // division: r[m] = s[m] - c w^d r[m-e], ascending so reads see results
        Int neg = -c;
        for (long m = ei; m <= emax_; ++m)
            c_[m].add_scaled_shifted(c_[m - ei], d, neg);
    }
}

std::vector<WPoly> expand_Ht(unsigned t, unsigned N) {
    if (t == 0) throw domain_error("expand_Ht: t must be >= 1");
    QSeries s = QSeries::unit(1, static_cast<long>(N));
    const Int minus_one = -1;
    // 1 / prod (1 - w^m q^{t m})^t
    for (unsigned long m = 1; t * m <= N; ++m)
        for (unsigned rep = 0; rep < t; ++rep)
            s.mul_factor(minus_one, Rat(static_cast<long>(t * m)), static_cast<unsigned>(m), -1);
    // prod (1 - q^{t m})^t
    for (unsigned long m = 1; t * m <= N; ++m)
        for (unsigned rep = 0; rep < t; ++rep)
            s.mul_factor(minus_one, Rat(static_cast<long>(t * m)), 0, +1);
    // 1 / prod (1 - q^m)
    for (unsigned long m = 1; m <= N; ++m)
        s.mul_factor(minus_one, Rat(static_cast<long>(m)), 0, -1);

    std::vector<WPoly> out;
    out.reserve(N + 1);
    for (long e = 0; e <= static_cast<long>(N); ++e) out.push_back(s.at_index(e));
    return out;
}

std::vector<WPoly> expand_Qn(unsigned N) {
    QSeries s = QSeries::unit(1, static_cast<long>(N));
    const Int minus_one = -1;
    for (unsigned long m = 1; m <= N; ++m)
        s.mul_factor(minus_one, Rat(static_cast<long>(m)), 1, -1);
    std::vector<WPoly> out;
    out.reserve(N + 1);
    for (long e = 0; e <= static_cast<long>(N); ++e) out.push_back(s.at_index(e));
    return out;
}

std::vector<Int> expand_tcore(unsigned t, unsigned N) {
    if (t == 0) throw domain_error("expand_tcore: t must be >= 1");
    // scalar series: prod (1-q^{tm})^t / prod (1-q^m)
    std::vector<Int> s(N + 1);
    s[0] = 1;
    for (unsigned long m = 1; t * m <= N; ++m) {
        unsigned long e = t * m;
        for (unsigned rep = 0; rep < t; ++rep)
            for (unsigned long k = N;; --k) {  // multiply by (1 - q^e)
                if (k < e) break;
                s[k] -= s[k - e];
                if (k == e) break;
            }
    }
    for (unsigned long m = 1; m <= N; ++m)
        for (unsigned long k = m; k <= N; ++k) s[k] += s[k - m];  // divide by (1 - q^m)
    return s;
}

const WPoly& PabExpansion::at(const Rat& n) const {
    static const WPoly kZero;
    Rat scaled = n * delta;
    if (scaled.get_den() != 1)
        throw grid_error("pab: n = " + n.get_str() + " is off the 1/" + std::to_string(delta) +
                         " grid");
    if (!scaled.get_num().fits_slong_p()) throw grid_error("pab: n out of range");
    long e = scaled.get_num().get_si();
    if (e < 0 || e > emax)
        throw grid_error("pab: n = " + n.get_str() + " outside the expanded range");
    auto it = polys.find(e);
    return it == polys.end() ? kZero : it->second;
}

PabExpansion expand_pab(const Rat& a, const Rat& b, const Rat& nmax, unsigned mcap) {
    if (!(a > 0)) throw domain_error("expand_pab: a must be positive");
    if (!(nmax >= 0)) throw domain_error("expand_pab: nmax must be >= 0");

    PabExpansion out;
    out.a = a;
    out.b = b;
    Int dlcm;
    mpz_lcm(dlcm.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    if (!dlcm.fits_slong_p()) throw grid_error("expand_pab: grid denominator out of range");
    out.delta = dlcm.get_si();

    Rat emax_r = nmax * out.delta;
    Int emax_i;
    mpz_fdiv_q(emax_i.get_mpz_t(), emax_r.get_num().get_mpz_t(), emax_r.get_den().get_mpz_t());
    if (!emax_i.fits_slong_p()) throw resource_limit_error("expand_pab: truncation too large");
    out.emax = emax_i.get_si();

    // R[k] = number of partitions of k into at most m parts, maintained as m grows
    long kmax = out.emax / out.delta;
    std::vector<Int> R(static_cast<size_t>(kmax) + 1);
    R[0] = 1;

    for (unsigned long m = 0;; ++m) {
        Rat e = a * Rat(static_cast<long>(m)) * Rat(static_cast<long>(m)) +
                b * Rat(static_cast<long>(m));
        if (e > nmax && 2 * a * Rat(static_cast<long>(m)) + b >= 0) break;  // past the vertex
        if (m > mcap)
            throw resource_limit_error("expand_pab: summation index cap " + std::to_string(mcap) +
                                       " exceeded");
        // grid exponent of the m-th term
        Rat es = e * out.delta;
        if (es.get_den() != 1) throw grid_error("expand_pab: internal grid inconsistency");
        if (es.get_num().fits_slong_p()) {
            long ei = es.get_num().get_si();
            if (ei >= 0) {
                for (long k = 0; k <= kmax && ei + k * out.delta <= out.emax; ++k) {
                    if (R[k] == 0) continue;
                    out.polys[ei + k * out.delta].add_term(static_cast<unsigned>(m), R[k]);
                }
            }
            // negative exponents fall off the stored grid; with a > 0 they can
            // only occur for finitely many m and are reported as a grid error,
            // since silently dropping them would corrupt the series
            if (ei < 0)
                throw grid_error("expand_pab: term exponent " + e.get_str() +
                                 " is negative (unsupported grid)");
        }
        // extend R to partitions into at most m+1 parts
        for (long k = static_cast<long>(m) + 1; k <= kmax; ++k) R[k] += R[k - (m + 1)];
    }

    // drop zero polynomials so `polys` stores only nonzero entries
    for (auto it = out.polys.begin(); it != out.polys.end();)
        it = it->second.is_zero() ? out.polys.erase(it) : std::next(it);
    return out;
}

} // namespace hookpoly
