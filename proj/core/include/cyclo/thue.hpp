#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

/// A finite integer string (k, r_1, ..., r_j) naming one element of a Thue
/// set. Constraints: k >= 0; if k = 0 the second term is >= 0; between 2
/// and k+2 terms in total.
struct ThueLabel {
    std::vector<std::int64_t> terms;

    bool valid() const;
    /// Level of the labeled element: it lies in T^(level) \ T^(level+1).
    std::int64_t level() const { return terms.front() - std::int64_t(terms.size()) + 2; }
    std::string str() const;  // space-separated integers
    static ThueLabel from_string(const std::string& text);

    bool operator==(const ThueLabel& other) const { return terms == other.terms; }
};

/// Total order on grammar-valid labels: most significant term first; a
/// label that is a strict prefix of another comes first. Coincides with the
/// numeric order of the labeled elements. Returns -1/0/+1;
/// std::domain_error on invalid labels.
int compare_labels(const ThueLabel& l1, const ThueLabel& l2);

/// Read access to a Thue set (or a finite truncation of one): the minima
/// t_k of the derived sets and ascending window enumeration of each level.
class ThueOracle {
public:
    virtual ~ThueOracle() = default;

    /// t_k, the smallest element of T^(k). Strictly increasing in k.
    virtual Rat min_of_derived(std::int64_t k) const = 0;

    /// Elements of T^(level) in [a, b), ascending, duplicate-free. A
    /// truncated oracle returns what it knows; label() reports a domain
    /// error when a needed bracket is missing.
    virtual std::vector<Rat> enumerate(std::int64_t level, const Rat& a,
                                       const Rat& b) const = 0;
};

/// The labeling procedure: largest k with t >= t_k, index within
/// [t_k, t_{k+1}), then recursive half-interval indexing (upper half
/// ascending from 0, lower half descending with negative indices, split at
/// the exact midpoint) until t is the left endpoint of its interval.
/// std::domain_error when t cannot be located within the oracle's
/// resolution.
ThueLabel label(const Rat& t, const ThueOracle& oracle);

/// A synthetic Thue-set truncation: every grammar-valid label with first
/// term <= max_k, at most `depth` index terms, and indices bounded by
/// `breadth` is decoded into a rational by recursive interval subdivision
/// (level-k anchor points at k+1). label() inverts decode() exactly on the
/// generated set.
class SyntheticThue : public ThueOracle {
public:
    SyntheticThue(std::int64_t max_k, std::int64_t depth, std::int64_t breadth);

    Rat min_of_derived(std::int64_t k) const override;
    std::vector<Rat> enumerate(std::int64_t level, const Rat& a,
                               const Rat& b) const override;

    /// Value of a generated label. std::domain_error if the label is
    /// outside this truncation.
    Rat decode(const ThueLabel& l) const;

    /// All generated points with their generating labels, ascending.
    const std::map<Rat, ThueLabel>& points() const { return points_; }

private:
    std::int64_t max_k_, depth_, breadth_;
    std::map<Rat, ThueLabel> points_;

    void generate(const Rat& lo, const Rat& hi, std::int64_t remaining,
                  std::vector<std::int64_t>& prefix);
};

/// A small genuine fragment of the Cassels-height set: 1, the heights
/// 2 + 2 mu(m)/phi(m) of 1 + w_m (complete below 2 and in (2, 9/4] within
/// the scan bound), and the limit point 2 -- together with the labels the
/// procedure assigns them. Serves as a realistic level-0/1 oracle below 9/4.
class CasselsFragment : public ThueOracle {
public:
    CasselsFragment();

    Rat min_of_derived(std::int64_t k) const override;
    std::vector<Rat> enumerate(std::int64_t level, const Rat& a,
                               const Rat& b) const override;

    const std::map<Rat, ThueLabel>& points() const { return points_; }

private:
    std::map<Rat, ThueLabel> points_;
    std::vector<Rat> level1_;  // known second-level values in [2, 3)
};

} // namespace cyclo
