#pragma once

#include <cstdint>
#include <optional>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

/// Moebius mu(n). n >= 1.
int mobius(std::int64_t n);

/// Euler phi(n). n >= 1.
std::int64_t euler_phi(std::int64_t n);

/// mu(n)/phi(n), the mean trace of a primitive n-th root of unity.
Rat mu_phi(std::int64_t n);

/// Exact mean trace: the average of the Galois conjugates. Computed
/// sparsely as sum a_k * mu_phi(order of w_n^k); no canonicalization of the
/// operand is required or performed.
Rat mean_trace(const CycInt& x);

struct HeightReport {
    Rat value;                    // the Cassels height, a non-negative rational
    std::int64_t conductor_used;  // conductor of the input representation
    std::size_t term_count;       // stored nonzero coefficients of the input
};

/// Cassels height M(x) = mean trace of |x|^2, computed as
/// mean_trace(x * conjugate(x)). Zero iff x represents 0; >= 1 otherwise.
HeightReport cassels_height(const CycInt& x);

/// Smallest i in [0, n) such that w_n^i * x has nonzero mean trace, where n
/// is the conductor of x. Such an i always exists for x != 0;
/// std::domain_error when x is zero.
std::int64_t find_nonzero_trace_shift(const CycInt& x);

/// Smallest N <= max_terms such that x is a sum of N roots of unity whose
/// orders divide search_conductor, or nullopt if no such expression exists
/// within the bounds. An upper bound for the minimal number of roots of
/// unity summing to x, not that minimum itself. Exhaustive multiset search
/// in nondecreasing exponent order, pruned by the partial-sum height.
/// Requires x != 0 and conductor(x) | search_conductor.
std::optional<int> min_roots_upper(const CycInt& x, std::int64_t search_conductor,
                                   int max_terms);

} // namespace cyclo
