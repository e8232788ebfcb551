#include "cyclo/thue.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cyclo/errors.hpp"
#include "cyclo/trace_height.hpp"

namespace cyclo {

bool ThueLabel::valid() const {
    if (terms.size() < 2) return false;
    std::int64_t k = terms.front();
    if (k < 0) return false;
    if (k == 0 && terms[1] < 0) return false;
    if (static_cast<std::int64_t>(terms.size()) > k + 2) return false;
    return true;
}

std::string ThueLabel::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << ' ';
        os << terms[i];
    }
    return os.str();
}

ThueLabel ThueLabel::from_string(const std::string& text) {
    ThueLabel l;
    std::istringstream is(text);
    std::int64_t v;
    while (is >> v) l.terms.push_back(v);
    if (!is.eof()) throw parse_error("malformed label: '" + text + "'");
    return l;
}

int compare_labels(const ThueLabel& l1, const ThueLabel& l2) {
    if (!l1.valid() || !l2.valid()) throw std::domain_error("compare_labels: invalid label");
    std::size_t n = std::min(l1.terms.size(), l2.terms.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (l1.terms[i] != l2.terms[i]) return l1.terms[i] < l2.terms[i] ? -1 : 1;
    }
    // Equal on the shorter length: the shorter label names the left
    // endpoint of the interval holding the longer one, so it comes first.
    if (l1.terms.size() == l2.terms.size()) return 0;
    return l1.terms.size() < l2.terms.size() ? -1 : 1;
}

namespace {

// Combined half-interval listing around the exact midpoint of (lo, hi):
// index i >= 0 is the i-th known element of [mid, hi) ascending, index
// i < 0 counts down from just below mid toward lo.
struct WindowListing {
    std::vector<Rat> lower;  // known points of the open lower half, ascending
    std::vector<Rat> upper;  // known points of [mid, hi), ascending

    bool empty() const { return lower.empty() && upper.empty(); }

    // Index convention: upper[j] has index j, lower counts down from -1.
    std::int64_t first_index() const {
        return lower.empty() ? 0 : -static_cast<std::int64_t>(lower.size());
    }
    bool has(std::int64_t i) const {
        if (i >= 0) return i < static_cast<std::int64_t>(upper.size());
        return -i <= static_cast<std::int64_t>(lower.size());
    }
    const Rat& at(std::int64_t i) const {
        return i >= 0 ? upper[i] : lower[static_cast<std::int64_t>(lower.size()) + i];
    }
};

WindowListing list_window(const ThueOracle& oracle, std::int64_t level, const Rat& lo,
                          const Rat& hi) {
    WindowListing w;
    Rat mid = (lo + hi) / 2;
    w.lower = oracle.enumerate(level, lo, mid);
    // The left endpoint belongs to higher levels; the listing is of the
    // open interval.
    if (!w.lower.empty() && w.lower.front() == lo) w.lower.erase(w.lower.begin());
    w.upper = oracle.enumerate(level, mid, hi);
    return w;
}

} // namespace

ThueLabel label(const Rat& t, const ThueOracle& oracle) {
    if (t < oracle.min_of_derived(0))
        throw std::domain_error("label: value below the smallest element");

    std::int64_t k = 0;
    while (t >= oracle.min_of_derived(k + 1)) ++k;

    auto row = oracle.enumerate(k, oracle.min_of_derived(k), oracle.min_of_derived(k + 1));
    if (row.empty() || t < row.front())
        throw std::domain_error("label: value not bracketed at its level");
    std::size_t r = 0;
    while (r + 1 < row.size() && row[r + 1] <= t) ++r;

    ThueLabel out;
    out.terms = {k, static_cast<std::int64_t>(r)};
    if (row[r] == t) return out;

    if (r + 1 >= row.size())
        throw std::domain_error("label: right bracket beyond oracle resolution");
    Rat lo = row[r];
    Rat hi = row[r + 1];

    for (std::int64_t level = k - 1;; --level) {
        if (level < 0) throw std::domain_error("label: value not found at oracle resolution");
        WindowListing w = list_window(oracle, level, lo, hi);
        if (w.empty() || t < w.at(w.first_index()))
            throw std::domain_error("label: value not bracketed in half-interval");
        std::int64_t j = w.first_index();
        while (w.has(j + 1) && w.at(j + 1) <= t) ++j;
        out.terms.push_back(j);
        if (w.at(j) == t) return out;
        if (!w.has(j + 1))
            throw std::domain_error("label: right bracket beyond oracle resolution");
        lo = w.at(j);
        hi = w.at(j + 1);
    }
}

// ---------------------------------------------------------------------------
// Synthetic truncation

namespace {

// Base point r of level k: k+1 + r/(r+1), ascending toward k+2.
Rat anchor_point(std::int64_t k, std::int64_t r) {
    return Rat(k + 1) + make_rat(r, r + 1);
}

// Sub-point with index i inside (lo, hi): nonnegative indices walk from the
// midpoint toward hi, negative ones descend from the midpoint toward lo.
Rat sub_point(const Rat& lo, const Rat& hi, std::int64_t i) {
    Rat mid = (lo + hi) / 2;
    if (i >= 0) return mid + (hi - mid) * make_rat(i, i + 1);
    return lo + (mid - lo) / Rat(-i + 1);
}

} // namespace

SyntheticThue::SyntheticThue(std::int64_t max_k, std::int64_t depth, std::int64_t breadth)
    : max_k_(max_k), depth_(depth), breadth_(breadth) {
    if (max_k < 0 || depth < 1 || breadth < 1)
        throw std::domain_error("SyntheticThue: max_k >= 0, depth >= 1, breadth >= 1 required");
    for (std::int64_t k = 0; k <= max_k_; ++k) {
        std::int64_t index_terms = std::min(depth_, k + 1);
        for (std::int64_t r = 0; r <= breadth_; ++r) {
            ThueLabel l;
            l.terms = {k, r};
            points_.emplace(anchor_point(k, r), l);
        }
        if (index_terms >= 2) {
            for (std::int64_t r = 0; r < breadth_; ++r) {
                std::vector<std::int64_t> prefix{k, r};
                generate(anchor_point(k, r), anchor_point(k, r + 1), index_terms - 1, prefix);
            }
        }
    }
}

void SyntheticThue::generate(const Rat& lo, const Rat& hi, std::int64_t remaining,
                             std::vector<std::int64_t>& prefix) {
    for (std::int64_t i = -breadth_; i <= breadth_; ++i) {
        ThueLabel l;
        l.terms = prefix;
        l.terms.push_back(i);
        points_.emplace(sub_point(lo, hi, i), l);
    }
    if (remaining >= 2) {
        for (std::int64_t i = -breadth_; i < breadth_; ++i) {
            prefix.push_back(i);
            generate(sub_point(lo, hi, i), sub_point(lo, hi, i + 1), remaining - 1, prefix);
            prefix.pop_back();
        }
    }
}

Rat SyntheticThue::min_of_derived(std::int64_t k) const {
    if (k < 0) throw std::domain_error("min_of_derived: negative level");
    return Rat(k + 1);
}

std::vector<Rat> SyntheticThue::enumerate(std::int64_t level, const Rat& a,
                                          const Rat& b) const {
    std::vector<Rat> out;
    for (auto it = points_.lower_bound(a); it != points_.end() && it->first < b; ++it) {
        if (it->second.level() >= level) out.push_back(it->first);
    }
    return out;
}

Rat SyntheticThue::decode(const ThueLabel& l) const {
    if (!l.valid()) throw std::domain_error("decode: invalid label");
    std::int64_t k = l.terms[0];
    std::int64_t r = l.terms[1];
    if (k > max_k_ || r < 0 || r > breadth_ ||
        static_cast<std::int64_t>(l.terms.size()) - 1 > std::min(depth_, k + 1))
        throw std::domain_error("decode: label outside this truncation");
    Rat value = anchor_point(k, r);
    if (l.terms.size() == 2) return value;
    if (r >= breadth_) throw std::domain_error("decode: label outside this truncation");
    Rat lo = value, hi = anchor_point(k, r + 1);
    for (std::size_t pos = 2; pos < l.terms.size(); ++pos) {
        std::int64_t i = l.terms[pos];
        if (i < -breadth_ || i > breadth_)
            throw std::domain_error("decode: index beyond truncation breadth");
        value = sub_point(lo, hi, i);
        if (pos + 1 < l.terms.size()) {
            if (i >= breadth_) throw std::domain_error("decode: label outside this truncation");
            Rat next = sub_point(lo, hi, i + 1);
            lo = value;
            hi = next;
        }
    }
    return value;
}

// ---------------------------------------------------------------------------
// Hand-built fragment of the real height set below 9/4

CasselsFragment::CasselsFragment() {
    const Rat two(2);
    const Rat nine_quarters = make_rat(9, 4);
    // Completeness caps: scanning m <= 400 catches every value 2 +- 2/phi
    // with phi <= 80, since phi(m) > 82 for all m > 400.
    const Rat below_cap = two - make_rat(2, 80);
    const Rat above_cap = two + make_rat(2, 80);

    std::vector<Rat> below{Rat(1)};  // the single-root height
    std::vector<Rat> above;
    for (std::int64_t m = 3; m <= 400; ++m) {
        if (mobius(m) == 0) continue;
        Rat v = two + Rat(2) * mu_phi(m);
        if (v > Rat(1) && v < two && v <= below_cap) below.push_back(v);
        if (v > two && v >= above_cap && v <= nine_quarters) above.push_back(v);
    }
    auto dedup = [](std::vector<Rat>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(below);
    dedup(above);

    for (std::size_t j = 0; j < below.size(); ++j) {
        ThueLabel l;
        l.terms = {0, static_cast<std::int64_t>(j)};
        points_.emplace(below[j], l);
    }
    {
        ThueLabel l;
        l.terms = {1, 0};
        points_.emplace(two, l);
    }
    // Above 2 the procedure splits [2, 5/2) at 9/4: the value 9/4 itself is
    // the first upper-half point, everything else here sits in the lower
    // half and counts down from the midpoint.
    std::int64_t down = 0;
    for (auto it = above.rbegin(); it != above.rend(); ++it) {
        ThueLabel l;
        if (*it == nine_quarters) {
            l.terms = {1, 0, 0};
        } else {
            l.terms = {1, 0, --down};
        }
        points_.emplace(*it, l);
    }

    // Second-level values in [2, 3): sums 1 + c for the smallest heights c.
    level1_ = {two, make_rat(5, 2), make_rat(8, 3), make_rat(14, 5), make_rat(17, 6)};
}

Rat CasselsFragment::min_of_derived(std::int64_t k) const {
    if (k < 0) throw std::domain_error("min_of_derived: negative level");
    return Rat(k + 1);
}

std::vector<Rat> CasselsFragment::enumerate(std::int64_t level, const Rat& a,
                                            const Rat& b) const {
    std::vector<Rat> out;
    if (level <= 0) {
        for (auto it = points_.lower_bound(a); it != points_.end() && it->first < b; ++it)
            out.push_back(it->first);
    } else if (level == 1) {
        for (const auto& v : level1_)
            if (v >= a && v < b) out.push_back(v);
    }
    return out;
}

} // namespace cyclo
