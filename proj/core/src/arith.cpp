#include "cyclo/arith.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "cyclo/errors.hpp"

namespace cyclo {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n, std::int64_t bound) {
    if (n <= 0) throw std::domain_error("factorize: n must be positive");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n && d <= bound; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) {
        // Remaining cofactor has no prime factor <= min(bound, sqrt(original)).
        // It is certainly prime if it is <= bound^2.
        if (bound < 0x7fffffff && n > bound * bound)
            throw resource_error("factorize: cofactor exceeds trial-division bound");
        out.emplace_back(n, 1);
    }
    return out;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool miller_rabin(std::uint64_t n) {
    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s && witness; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) witness = false;
        }
        if (witness) return false;
    }
    return true;
}

} // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    if (n < 1'000'000) {
        for (std::int64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }
    return miller_rabin(static_cast<std::uint64_t>(n));
}

std::int64_t next_prime(std::int64_t n) {
    std::int64_t c = n < 2 ? 2 : n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

std::int64_t gcd_ll(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm_ll(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::int64_t isqrt_ll(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    if (n == 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

} // namespace cyclo
