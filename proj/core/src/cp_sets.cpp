#include "cyclo/cp_sets.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclo/arith.hpp"
#include "cyclo/quadforms.hpp"

namespace cyclo {

namespace {

void require_odd_prime_ge5(std::int64_t p, const char* who) {
    if (p == 3)
        throw std::domain_error(std::string(who) +
                                ": p = 3 is a proper subset of the closed form; use c3_membership");
    if (p < 5 || !is_prime(p))
        throw std::domain_error(std::string(who) + ": p must be a prime >= 5");
}

std::int64_t coeff_sum(const std::vector<std::int64_t>& a) {
    std::int64_t s = 0;
    for (auto v : a) s += v;
    return s;
}

} // namespace

NormalizedCoeffs normalize_coeffs(const std::vector<std::int64_t>& a, std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("normalize_coeffs: p must be an odd prime");
    if (static_cast<std::int64_t>(a.size()) != p)
        throw std::invalid_argument("normalize_coeffs: vector length must equal p");
    std::int64_t pp = (p - 1) / 2;
    std::int64_t s0 = coeff_sum(a);
    // Unique translation t with s0 + p t in [-p', p']; the p-th roots of
    // unity sum to zero, so translating leaves the element unchanged.
    std::int64_t num = s0 + pp;
    std::int64_t q = num >= 0 ? num / p : -((-num + p - 1) / p);
    std::int64_t t = -q;
    NormalizedCoeffs out;
    out.shift = t;
    out.vec.p = p;
    out.vec.a.reserve(a.size());
    for (auto v : a) out.vec.a.push_back(v + t);
    if (coeff_sum(out.vec.a) < 0) {
        out.sign = -1;
        for (auto& v : out.vec.a) v = -v;
    }
    return out;
}

Rat variance_height(const std::vector<std::int64_t>& a, std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::domain_error("variance_height: p must be an odd prime");
    if (static_cast<std::int64_t>(a.size()) != p)
        throw std::invalid_argument("variance_height: vector length must equal p");
    std::int64_t pp = (p - 1) / 2;

    Int s(0), sq(0);
    for (auto v : a) {
        s += v;
        sq += Int(v) * v;
    }
    Rat direct = make_rat(Int(p) * sq - s * s, Int(2) * pp);

    // Independent route through the variance of the coefficients.
    Rat mean = make_rat(s, p);
    Rat var(0);
    for (auto v : a) {
        Rat d = Rat(Int(v)) - mean;
        var += d * d;
    }
    var /= p;
    Rat via_variance = make_rat(Int(p) * p, Int(2) * pp) * var;

    if (direct != via_variance)
        throw std::logic_error("variance_height: the two closed forms disagree");
    return direct;
}

Rat cp_value(std::int64_t p, std::int64_t s, std::int64_t r) {
    require_odd_prime_ge5(p, "cp_value");
    std::int64_t pp = (p - 1) / 2;
    if (s < 0 || s > pp) throw std::domain_error("cp_value: s out of [0, (p-1)/2]");
    if (r < 0) throw std::domain_error("cp_value: r must be >= 0");
    return make_rat(Int(s) * (p - s) + Int(2) * r * p, Int(2) * pp);
}

std::optional<std::pair<std::int64_t, std::int64_t>> cp_membership(std::int64_t p,
                                                                   const Rat& q) {
    require_odd_prime_ge5(p, "cp_membership");
    if (q < 0) return std::nullopt;
    std::int64_t pp = (p - 1) / 2;
    for (std::int64_t s = 0; s <= pp; ++s) {
        Rat rest = q * pp - Rat(Int(s) * (p - s)) / 2;
        if (rest < 0 || !rat_is_integer(rest)) continue;
        Int num = rest.get_num();
        if (num % p != 0) continue;
        Int r = num / p;
        if (!r.fits_slong_p()) continue;
        return std::make_pair(s, r.get_si());
    }
    return std::nullopt;
}

std::vector<CpElement> cp_enumerate(std::int64_t p, const Rat& bound, bool with_witnesses) {
    require_odd_prime_ge5(p, "cp_enumerate");
    std::int64_t pp = (p - 1) / 2;
    std::vector<CpElement> out;
    for (std::int64_t s = 0; s <= pp; ++s) {
        for (std::int64_t r = 0;; ++r) {
            Rat v = cp_value(p, s, r);
            if (v > bound) break;
            CpElement e;
            e.p = p;
            e.s = s;
            e.r = r;
            e.value = v;
            if (with_witnesses) e.witness = cp_witness(p, s, r);
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const CpElement& a, const CpElement& b) { return a.value < b.value; });
    return out;
}

namespace {

// p >= 11: spread r = w^2+x^2+y^2+z^2 over four equal-valued pairs,
// replacing (v, v) by (v+n, v-n); each spread adds p n^2 to p'M.
std::vector<std::int64_t> witness_pair_spread(std::int64_t p, std::int64_t s, std::int64_t r) {
    std::vector<std::int64_t> a(p, 0);
    for (std::int64_t i = 0; i < s; ++i) a[i] = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::int64_t i = 0; i + 1 < s; i += 2) pairs.emplace_back(i, i + 1);
    for (std::int64_t i = s; i + 1 < p; i += 2) pairs.emplace_back(i, i + 1);
    if (pairs.size() < 4) throw std::logic_error("cp_witness: fewer than four pairs");
    auto squares = four_squares(r);
    for (int i = 0; i < 4; ++i) {
        auto [lo, hi] = pairs[i];
        a[lo] += squares[i];
        a[hi] -= squares[i];
    }
    return a;
}

std::vector<std::int64_t> witness_p7(std::int64_t s, std::int64_t r) {
    if (s <= 2) {
        // (0,0,0,0,0,a5,a6) -> (-a,-b,-c,-d, a+b+c+d, a5, a6); the sum of
        // squares grows by the A4 form value, which must equal 2r.
        auto [a, b, c, d] = a4_form(2 * r);
        std::vector<std::int64_t> out{-a, -b, -c, -d, a + b + c + d, 0, 0};
        if (s >= 1) out[6] = 1;
        if (s == 2) out[5] = 1;
        return out;
    }
    // s = 3: (0,0,0,0,1,1,1) -> (a,b,c,-(a+b+c), d+1, -d+1, 1).
    auto [a, b, c, d] = a3a1_form(2 * r);
    return {a, b, c, -(a + b + c), d + 1, -d + 1, 1};
}

std::vector<std::int64_t> witness_p5(std::int64_t s, std::int64_t r) {
    switch (s) {
        case 0: {
            auto [a, b, c, d] = a4_form(2 * r);
            return {-a, -b, -c, -d, a + b + c + d};
        }
        case 1: {
            auto [a, b, c] = universal_poly2(r);
            return {0, -a, -b, -c, 1 + a + b + c};
        }
        default: {  // s = 2
            auto [a, b, c] = universal_poly1(r);
            return {-a, -b, -c, 1 + a + b, 1 + c};
        }
    }
}

} // namespace

WitnessVector cp_witness(std::int64_t p, std::int64_t s, std::int64_t r) {
    require_odd_prime_ge5(p, "cp_witness");
    std::int64_t pp = (p - 1) / 2;
    if (s < 0 || s > pp) throw std::domain_error("cp_witness: s out of [0, (p-1)/2]");
    if (r < 0) throw std::domain_error("cp_witness: r must be >= 0");

    WitnessVector w;
    w.p = p;
    if (r == 0) {
        // The minimal vector: s ones, then zeros.
        w.a.assign(p, 0);
        for (std::int64_t i = 0; i < s; ++i) w.a[i] = 1;
    } else if (p >= 11) {
        w.a = witness_pair_spread(p, s, r);
    } else if (p == 7) {
        w.a = witness_p7(s, r);
    } else {
        w.a = witness_p5(s, r);
    }

    if (variance_height(w.a, p) != cp_value(p, s, r))
        throw std::logic_error("cp_witness: constructed vector failed verification");
    return w;
}

std::pair<Rat, WitnessVector> minimal_height_for_s(std::int64_t p, std::int64_t s) {
    return {cp_value(p, s, 0), cp_witness(p, s, 0)};
}

MinimalityScan minimality_scan(std::int64_t p, std::int64_t s, std::int64_t lo,
                               std::int64_t hi) {
    if (lo > hi) throw std::domain_error("minimality_scan: empty box");
    MinimalityScan scan;
    std::vector<std::int64_t> a(p, lo);
    while (true) {
        std::int64_t sum = 0, sq = 0;
        for (auto v : a) {
            sum += v;
            sq += v * v;
        }
        if (sum == s) {
            std::int64_t twice = (p * sq - s * s) / 2;  // p' M, always an integer
            if (scan.min_twice < 0 || twice < scan.min_twice) {
                scan.min_twice = twice;
                scan.minimizer_count = 1;
                scan.minimizers_all_01 =
                    std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0 || v == 1; });
            } else if (twice == scan.min_twice) {
                ++scan.minimizer_count;
                scan.minimizers_all_01 =
                    scan.minimizers_all_01 &&
                    std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0 || v == 1; });
            }
        }
        std::int64_t i = 0;
        while (i < p && a[i] == hi) a[i++] = lo;
        if (i == p) break;
        ++a[i];
    }
    return scan;
}

bool c3_shape_candidate(std::int64_t N) { return N >= 0 && N % 3 != 2; }

bool c3_membership(std::int64_t N, std::int64_t factor_bound) {
    if (N < 0) throw std::domain_error("c3_membership: N must be >= 0");
    if (N == 0) return true;
    for (const auto& [q, e] : factorize(N, factor_bound)) {
        if (q % 3 == 2 && e % 2 != 0) return false;
    }
    return true;
}

std::optional<std::pair<std::int64_t, std::int64_t>> c3_witness(std::int64_t N,
                                                                std::int64_t factor_bound) {
    if (N < 0) throw std::domain_error("c3_witness: N must be >= 0");
    if (N == 0) return std::make_pair<std::int64_t, std::int64_t>(0, 0);
    if (!c3_membership(N, factor_bound)) return std::nullopt;
    // Every represented N has a representation with a >= b >= 0.
    std::int64_t limit = 2 * isqrt_ll(N / 3 + 1) + 2;
    for (std::int64_t a = 0; a <= limit; ++a)
        for (std::int64_t b = 0; b <= a; ++b)
            if (a * a - a * b + b * b == N) return std::make_pair(a, b);
    throw std::logic_error("c3_witness: member without bounded witness");
}

} // namespace cyclo
