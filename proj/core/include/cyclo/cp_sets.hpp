#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

/// Coefficient vector a_0..a_{p-1} certifying that sum a_i w_p^i realizes a
/// claimed height. Kept with its prime so it can always be re-verified.
struct WitnessVector {
    std::int64_t p = 0;
    std::vector<std::int64_t> a;
};

/// One member of the restricted height set for the prime p: the pair (s, r)
/// with 0 <= s <= (p-1)/2, r >= 0, and the exact value
/// (s(p-s)/2 + r p) / ((p-1)/2). Distinct (s, r) give distinct values.
struct CpElement {
    std::int64_t p = 0;
    std::int64_t s = 0;
    std::int64_t r = 0;
    Rat value;
    std::optional<WitnessVector> witness;
};

struct NormalizedCoeffs {
    WitnessVector vec;    // translated/negated so the coefficient sum is in [0, p']
    int sign = 1;         // -1 when the vector was negated
    std::int64_t shift = 0;  // the translation t applied to every entry
};

/// Translates all entries by a common t (which does not change the
/// represented element, since the p-th roots of unity sum to 0) and negates
/// if needed so the coefficient sum lands in [0, (p-1)/2].
NormalizedCoeffs normalize_coeffs(const std::vector<std::int64_t>& a, std::int64_t p);

/// The height of sum a_i w_p^i computed by the two closed forms
///   (p * sum a_i^2 - s^2) / 2  and  p^2/2 * variance(a),
/// both divided by p' = (p-1)/2. The two routes are evaluated independently
/// and must agree; std::logic_error if they ever do not.
Rat variance_height(const std::vector<std::int64_t>& a, std::int64_t p);

/// Exact value (s(p-s)/2 + r p)/p'. Requires p >= 5 prime, 0 <= s <= p',
/// r >= 0. p = 3 is rejected with std::domain_error: the closed form
/// overshoots there, use c3_membership instead.
Rat cp_value(std::int64_t p, std::int64_t s, std::int64_t r);

/// Inverts cp_value exactly: the unique (s, r) with cp_value(p,s,r) == q,
/// or nullopt when q is not of that shape.
std::optional<std::pair<std::int64_t, std::int64_t>> cp_membership(std::int64_t p,
                                                                   const Rat& q);

/// All elements with value <= bound, ascending, no duplicates. Witnesses
/// are attached when with_witnesses is set.
std::vector<CpElement> cp_enumerate(std::int64_t p, const Rat& bound,
                                    bool with_witnesses = false);

/// Constructive witness for (p, s, r): a vector whose normalized sum is s
/// and whose height is exactly cp_value(p, s, r). r = 0 returns the minimal
/// 0/1 vector; r > 0 follows the three-case construction (four-squares pair
/// spreading for p >= 11, the A4 / A3+A1 substitutions for p = 7, the
/// universal-polynomial substitutions for p = 5). Always verified via
/// variance_height before returning; std::logic_error on verification
/// failure (which must never happen).
WitnessVector cp_witness(std::int64_t p, std::int64_t s, std::int64_t r);

/// The minimum height over vectors with coefficient sum s, which is
/// s(p-s)/(2p'), together with its 0/1 witness.
std::pair<Rat, WitnessVector> minimal_height_for_s(std::int64_t p, std::int64_t s);

/// Exhaustive scan over all vectors with entries in [lo, hi] and sum
/// exactly s. Reports the minimal value of p' * M, how many vectors attain
/// it, and whether all minimizers are 0/1 vectors. For tests.
struct MinimalityScan {
    std::int64_t min_twice = -1;  // minimal p'*M (always an integer here)
    std::int64_t minimizer_count = 0;
    bool minimizers_all_01 = true;
};
MinimalityScan minimality_scan(std::int64_t p, std::int64_t s, std::int64_t lo,
                               std::int64_t hi);

/// Membership of N in the p = 3 height set: every prime q = 2 (mod 3) must
/// appear with even exponent in N. N = 0 counts as a member (beta = 0).
/// Factorization by trial division up to factor_bound; resource_error when
/// that cannot decide.
bool c3_membership(std::int64_t N, std::int64_t factor_bound = 1'000'000);

/// A pair (a, b) with a^2 - ab + b^2 = N when N is a member, else nullopt.
/// Searched over a >= b >= 0, ascending a.
std::optional<std::pair<std::int64_t, std::int64_t>> c3_witness(
    std::int64_t N, std::int64_t factor_bound = 1'000'000);

/// The p = 3 shape test of the closed form, i.e. N != 2 (mod 3). A strict
/// superset of c3_membership: 6, 10, 15, 18 pass this but are not members.
bool c3_shape_candidate(std::int64_t N);

} // namespace cyclo
