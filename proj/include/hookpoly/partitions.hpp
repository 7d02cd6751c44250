#pragma once
// Exact partition combinatorics: enumeration, hook lengths, the t-hook and
// number-of-parts statistics, and the pentagonal-number recurrence for p(n).
//
// The brute-force statistic polynomials here are the ground-truth oracles the
// generating-function expansions are tested against; they enumerate every
// partition and are capped accordingly.

#include <cstdint>
#include <functional>
#include <vector>

#include "wpoly.hpp"

namespace hookpoly {

// weakly decreasing positive parts; empty vector = the empty partition of 0
using Partition = std::vector<unsigned>;

// Visit all partitions of n in reverse lexicographic order ((n), (n-1,1), ...,
// (1^n)). The callback receives a reusable buffer; copy if you keep it.
void for_each_partition(unsigned n, const std::function<void(const Partition&)>& fn);

uint64_t count_partitions_enumerated(unsigned n);

Partition conjugate(const Partition& lam);

// hook length of every cell, row by row
std::vector<std::vector<unsigned>> hook_lengths(const Partition& lam);

// number of cells whose hook length is divisible by t (t >= 1)
unsigned count_t_hooks(const Partition& lam, unsigned t);

// P_t(w, n) = sum over partitions of n of w^{#t-hooks}, by direct enumeration.
// Throws resource_limit_error if n exceeds cap.
WPoly brute_force_Pt(unsigned t, unsigned n, unsigned cap = 40);

// Q_n(w) = sum over partitions of n of w^{#parts}, by direct enumeration.
WPoly brute_force_Qn(unsigned n, unsigned cap = 40);

// p(0..n) by the pentagonal recurrence, exact
std::vector<Int> partition_numbers(unsigned n);

// cached single value (grows an internal table, thread-safe)
const Int partition_number(unsigned n);

} // namespace hookpoly
