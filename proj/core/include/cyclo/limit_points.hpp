#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

enum class Side { above, below };

/// One step of the two-term limit construction: the height of
/// g1 + w_ell * g2 where w_ell = w_{ell_star} * w_n^shift (or
/// w_{2 ell_star} * w_n^shift when doubled), together with the exact cross
/// term and its closed form -+ 2/(ell_star - 1) * tr(w_n^shift conj(g1) g2).
struct LimitStep {
    std::int64_t ell_star = 0;
    std::int64_t shift = 0;
    bool doubled = false;
    Rat height;           // M(g1 + w_ell g2)
    Rat cross;            // height - M(g1) - M(g2), computed from traces
    Rat predicted_cross;  // the closed form; must equal cross exactly
};

/// tr(w^-1 g1 conj(g2)) + tr(w conj(g1) g2) for a root of unity w given as
/// a single +-1 term. Equals M(g1 + w g2) - M(g1) - M(g2) exactly.
/// std::domain_error when w is not in unit-root form.
Rat cross_term(const CycInt& g1, const CycInt& g2, const CycInt& omega);

/// The sequence M(g1 + w_ell g2) approaching M(g1) + M(g2) strictly from
/// the requested side, using the smallest `count` odd primes not dividing
/// the common conductor (doubled to 2*ell_star when needed to flip the
/// side). Every step's height differs from the limit and every cross term
/// matches its closed form. std::domain_error when g1 or g2 is zero.
std::vector<LimitStep> two_term_sequence(const CycInt& g1, const CycInt& g2,
                                         Side side, int count);

/// One step of the multi-term construction: the exact height of
/// beta = g_0 + sum g_k w_{n_k} and its absolute deviation from
/// sum M(g_k).
struct MultiTermStep {
    Rat height;
    Rat deviation;
    std::vector<std::int64_t> orders;  // the n_k used this step
};

/// Heights of beta_j = g_0 + sum_k g_k w_{n_k} for j = 1..steps, where the
/// n_k of step j are the r smallest distinct primes exceeding
/// max(conductor, 2^(j+1)); all pairwise ratio orders are then products of
/// two large primes and grow geometrically. The deviations tend to 0 and
/// the limit is sum M(g_k).
std::vector<MultiTermStep> multi_term_limit(const std::vector<CycInt>& gs, int steps);

} // namespace cyclo
