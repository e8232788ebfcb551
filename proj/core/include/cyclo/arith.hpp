#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

/// Prime factorization (p, e) pairs in ascending p, by trial division.
/// Factors above `bound` cannot be split; if after removing all primes
/// <= bound a composite cofactor may remain, throws resource_error.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n,
                                                    std::int64_t bound = 1'000'000);

bool is_prime(std::int64_t n);

/// Smallest prime strictly greater than n.
std::int64_t next_prime(std::int64_t n);

std::int64_t gcd_ll(std::int64_t a, std::int64_t b);
std::int64_t lcm_ll(std::int64_t a, std::int64_t b);

/// Floor of the square root; exact for all non-negative n.
std::int64_t isqrt_ll(std::int64_t n);

inline bool is_square_ll(std::int64_t n) {
    if (n < 0) return false;
    std::int64_t r = isqrt_ll(n);
    return r * r == n;
}

} // namespace cyclo
