#include "hookpoly/partitions.hpp"

#include <mutex>

#include "hookpoly/errors.hpp"

namespace hookpoly {

void for_each_partition(unsigned n, const std::function<void(const Partition&)>& fn) {
    Partition a;
    if (n == 0) {
        fn(a);  // the empty partition
        return;
    }
    a.push_back(n);
    for (;;) {
        fn(a);
        // rightmost part > 1
        size_t k = a.size();
        while (k > 0 && a[k - 1] == 1) --k;
        if (k == 0) return;  // all ones: done
        --k;
        unsigned v = a[k] - 1;
        unsigned rem = static_cast<unsigned>(a.size() - k - 1) + 1;  // trailing ones + the 1 we removed
        a.resize(k);
        a.push_back(v);
        while (rem > v) {
            a.push_back(v);
            rem -= v;
        }
        if (rem > 0) a.push_back(rem);
    }
}

uint64_t count_partitions_enumerated(unsigned n) {
    uint64_t c = 0;
    for_each_partition(n, [&](const Partition&) { ++c; });
    return c;
}

Partition conjugate(const Partition& lam) {
    Partition out;
    if (lam.empty()) return out;
    out.resize(lam[0]);
    for (unsigned part : lam)
        for (unsigned j = 0; j < part; ++j) ++out[j];
    return out;
}

std::vector<std::vector<unsigned>> hook_lengths(const Partition& lam) {
    std::vector<std::vector<unsigned>> out(lam.size());
    Partition conj = conjugate(lam);
    for (size_t i = 0; i < lam.size(); ++i) {
        out[i].resize(lam[i]);
        for (unsigned j = 0; j < lam[i]; ++j)
            out[i][j] = (lam[i] - j) + (conj[j] - static_cast<unsigned>(i)) - 1;
    }
    return out;
}

unsigned count_t_hooks(const Partition& lam, unsigned t) {
    if (t == 0) throw domain_error("count_t_hooks: t must be >= 1");
    unsigned count = 0;
    Partition conj = conjugate(lam);
    for (size_t i = 0; i < lam.size(); ++i)
        for (unsigned j = 0; j < lam[i]; ++j) {
            unsigned hook = (lam[i] - j) + (conj[j] - static_cast<unsigned>(i)) - 1;
            if (hook % t == 0) ++count;
        }
    return count;
}

namespace {

void check_cap(unsigned n, unsigned cap, const char* what) {
    if (n > cap)
        throw resource_limit_error(std::string(what) + ": n = " + std::to_string(n) +
                                   " exceeds enumeration cap " + std::to_string(cap));
}

WPoly histogram_to_poly(const std::vector<Int>& hist) {
    WPoly p;
    for (unsigned k = 0; k < hist.size(); ++k)
        if (hist[k] != 0) p.add_term(k, hist[k]);
    return p;
}

} // namespace

WPoly brute_force_Pt(unsigned t, unsigned n, unsigned cap) {
    if (t == 0) throw domain_error("brute_force_Pt: t must be >= 1");
    check_cap(n, cap, "brute_force_Pt");
    std::vector<Int> hist(n + 1);
    for_each_partition(n, [&](const Partition& lam) { ++hist[count_t_hooks(lam, t)]; });
    return histogram_to_poly(hist);
}

WPoly brute_force_Qn(unsigned n, unsigned cap) {
    check_cap(n, cap, "brute_force_Qn");
    std::vector<Int> hist(n + 1);
    for_each_partition(n, [&](const Partition& lam) { ++hist[lam.size()]; });
    return histogram_to_poly(hist);
}

std::vector<Int> partition_numbers(unsigned n) {
    std::vector<Int> p(n + 1);
    p[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        Int s = 0;
        for (unsigned k = 1;; ++k) {
            unsigned long g1 = static_cast<unsigned long>(k) * (3UL * k - 1) / 2;
            unsigned long g2 = static_cast<unsigned long>(k) * (3UL * k + 1) / 2;
            if (g1 > m) break;
            if (k % 2 == 1) {
                s += p[m - g1];
                if (g2 <= m) s += p[m - g2];
            } else {
                s -= p[m - g1];
                if (g2 <= m) s -= p[m - g2];
            }
        }
        p[m] = s;
    }
    return p;
}

const Int partition_number(unsigned n) {
    static std::mutex mu;
    static std::vector<Int> table = {1};
    std::lock_guard<std::mutex> lock(mu);
    if (n >= table.size()) {
        unsigned target = std::max<unsigned>(n, static_cast<unsigned>(table.size() * 2));
        table = partition_numbers(target);
    }
    return table[n];
}

} // namespace hookpoly
