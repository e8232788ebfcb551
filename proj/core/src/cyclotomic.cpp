#include "cyclo/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cyclo/arith.hpp"

namespace cyclo {

namespace {

std::int64_t mod_pos(std::int64_t k, std::int64_t n) {
    std::int64_t r = k % n;
    return r < 0 ? r + n : r;
}

void add_term(CycInt::CoeffMap& m, std::int64_t k, const Int& c) {
    if (c == 0) return;
    auto it = m.find(k);
    if (it == m.end()) {
        m.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

} // namespace

CycInt CycInt::from_coeffs(std::int64_t n, const std::vector<Int>& a) {
    if (n < 1) throw std::domain_error("conductor must be positive");
    if (static_cast<std::int64_t>(a.size()) != n)
        throw std::invalid_argument("coefficient count " + std::to_string(a.size()) +
                                    " does not match conductor " + std::to_string(n));
    CycInt x;
    x.n_ = n;
    for (std::int64_t k = 0; k < n; ++k)
        if (a[k] != 0) x.coeffs_.emplace(k, a[k]);
    return x;
}

CycInt CycInt::from_coeffs(std::int64_t n, const std::vector<std::int64_t>& a) {
    std::vector<Int> big(a.begin(), a.end());
    return from_coeffs(n, big);
}

CycInt CycInt::integer(const Int& v) {
    CycInt x;
    if (v != 0) x.coeffs_.emplace(0, v);
    return x;
}

CycInt CycInt::root_of_unity(std::int64_t n, std::int64_t k) {
    return term(n, k, 1);
}

CycInt CycInt::term(std::int64_t n, std::int64_t k, const Int& c) {
    if (n < 1) throw std::domain_error("conductor must be positive");
    CycInt x;
    x.n_ = n;
    if (c != 0) x.coeffs_.emplace(mod_pos(k, n), c);
    return x;
}

bool CycInt::is_unit_root_form() const {
    if (coeffs_.size() != 1) return false;
    const Int& c = coeffs_.begin()->second;
    return c == 1 || c == -1;
}

CycInt embed(const CycInt& x, std::int64_t m) {
    if (m < 1 || m % x.n_ != 0)
        throw std::domain_error("embed: conductor " + std::to_string(x.n_) +
                                " does not divide " + std::to_string(m));
    if (m == x.n_) return x;
    CycInt y;
    y.n_ = m;
    std::int64_t stretch = m / x.n_;
    for (const auto& [k, c] : x.coeffs_) y.coeffs_.emplace(k * stretch, c);
    return y;
}

CycInt add(const CycInt& x, const CycInt& y) {
    std::int64_t n = lcm_ll(x.n_, y.n_);
    CycInt a = embed(x, n), b = embed(y, n);
    CycInt out;
    out.n_ = n;
    out.coeffs_ = a.coeffs_;
    for (const auto& [k, c] : b.coeffs_) add_term(out.coeffs_, k, c);
    return out;
}

CycInt neg(const CycInt& x) {
    CycInt out;
    out.n_ = x.n_;
    for (const auto& [k, c] : x.coeffs_) out.coeffs_.emplace(k, -c);
    return out;
}

CycInt sub(const CycInt& x, const CycInt& y) { return add(x, neg(y)); }

CycInt mul(const CycInt& x, const CycInt& y) {
    std::int64_t n = lcm_ll(x.n_, y.n_);
    CycInt a = embed(x, n), b = embed(y, n);
    CycInt out;
    out.n_ = n;
    for (const auto& [k1, c1] : a.coeffs_)
        for (const auto& [k2, c2] : b.coeffs_)
            add_term(out.coeffs_, (k1 + k2) % n, c1 * c2);
    return out;
}

CycInt conjugate(const CycInt& x) {
    CycInt out;
    out.n_ = x.n_;
    for (const auto& [k, c] : x.coeffs_) out.coeffs_.emplace(mod_pos(-k, x.n_), c);
    return out;
}

CycInt galois(const CycInt& x, std::int64_t j) {
    std::int64_t n = x.n_;
    std::int64_t jm = mod_pos(j, n);
    if (gcd_ll(jm, n) != 1)
        throw std::domain_error("galois: exponent multiplier " + std::to_string(j) +
                                " is not coprime to conductor " + std::to_string(n));
    CycInt out;
    out.n_ = n;
    for (const auto& [k, c] : x.coeffs_) out.coeffs_.emplace((k * jm) % n, c);
    return out;
}

std::int64_t order_of_term(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 0 || k >= n) throw std::domain_error("order_of_term: exponent out of range");
    return n / gcd_ll(n, k);
}

namespace {

// Dense integer polynomials, constant term first. Divisions below are exact
// (monic divisors), so plain synthetic division suffices.
using Poly = std::vector<Int>;

Poly x_pow_n_minus_1(std::int64_t n) {
    Poly p(n + 1, Int(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

Poly divide_exact(const Poly& num, const Poly& den) {
    Poly rem = num;
    Poly quot(num.size() - den.size() + 1, Int(0));
    for (std::int64_t i = static_cast<std::int64_t>(quot.size()) - 1; i >= 0; --i) {
        Int c = rem[i + den.size() - 1];  // den is monic
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return quot;
}

std::unordered_map<std::int64_t, Poly> phi_cache;
std::mutex phi_mutex;

Poly cyclotomic_poly_locked(std::int64_t n) {
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    Poly result;
    if (n == 1) {
        result = {Int(-1), Int(1)};  // x - 1
    } else {
        Poly p = x_pow_n_minus_1(n);
        for (std::int64_t d = 1; d < n; ++d)
            if (n % d == 0) p = divide_exact(p, cyclotomic_poly_locked(d));
        result = p;
    }
    phi_cache.emplace(n, result);
    return result;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(std::int64_t n) {
    if (n < 1) throw std::domain_error("cyclotomic_polynomial: n must be positive");
    std::lock_guard<std::mutex> lock(phi_mutex);
    return cyclotomic_poly_locked(n);
}

CycInt canonical_form(const CycInt& x) {
    Poly phi = cyclotomic_polynomial(x.n_);
    std::int64_t deg = static_cast<std::int64_t>(phi.size()) - 1;
    std::vector<Int> dense(x.n_, Int(0));
    for (const auto& [k, c] : x.coeffs_) dense[k] = c;
    for (std::int64_t i = x.n_ - 1; i >= deg; --i) {
        Int c = dense[i];
        if (c == 0) continue;
        for (std::int64_t j = 0; j <= deg; ++j) dense[i - deg + j] -= c * phi[j];
    }
    CycInt out;
    out.n_ = x.n_;
    for (std::int64_t k = 0; k < deg; ++k)
        if (dense[k] != 0) out.coeffs_.emplace(k, dense[k]);
    return out;
}

bool is_zero(const CycInt& x) {
    if (x.coeffs().empty()) return true;
    return canonical_form(x).coeffs().empty();
}

bool equals(const CycInt& x, const CycInt& y) { return is_zero(sub(x, y)); }

} // namespace cyclo
