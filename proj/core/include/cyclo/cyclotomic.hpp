#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

/// An element of Z[w_n]: a conductor n and a sparse map exponent -> integer
/// coefficient representing sum_k a_k w_n^k. Values are immutable once
/// built; every operation returns a fresh value. Two different stored forms
/// may denote the same algebraic number (use equals / canonical_form).
class CycInt {
public:
    using CoeffMap = std::map<std::int64_t, Int>;

    /// Zero in Z[w_1].
    CycInt() : n_(1) {}

    /// sum a[k] * w_n^k. Requires a.size() == n; zero coefficients are dropped.
    static CycInt from_coeffs(std::int64_t n, const std::vector<Int>& a);
    static CycInt from_coeffs(std::int64_t n, const std::vector<std::int64_t>& a);

    /// The rational integer v (conductor 1).
    static CycInt integer(const Int& v);

    /// w_n^k (k reduced mod n).
    static CycInt root_of_unity(std::int64_t n, std::int64_t k);

    /// Single term c * w_n^k.
    static CycInt term(std::int64_t n, std::int64_t k, const Int& c);

    std::int64_t conductor() const { return n_; }
    const CoeffMap& coeffs() const { return coeffs_; }

    /// Number of stored (nonzero) terms in this representation.
    std::size_t term_count() const { return coeffs_.size(); }

    /// True when the stored form is a single term with coefficient +1 or -1,
    /// i.e. syntactically a root of unity.
    bool is_unit_root_form() const;

    bool identical(const CycInt& other) const {
        return n_ == other.n_ && coeffs_ == other.coeffs_;
    }

private:
    std::int64_t n_;
    CoeffMap coeffs_;

    friend CycInt add(const CycInt&, const CycInt&);
    friend CycInt sub(const CycInt&, const CycInt&);
    friend CycInt mul(const CycInt&, const CycInt&);
    friend CycInt neg(const CycInt&);
    friend CycInt conjugate(const CycInt&);
    friend CycInt galois(const CycInt&, std::int64_t);
    friend CycInt embed(const CycInt&, std::int64_t);
    friend CycInt canonical_form(const CycInt&);
};

/// Exact ring operations. Operands with different conductors are first
/// embedded into the lcm of the two conductors.
CycInt add(const CycInt& x, const CycInt& y);
CycInt sub(const CycInt& x, const CycInt& y);
CycInt mul(const CycInt& x, const CycInt& y);
CycInt neg(const CycInt& x);

inline CycInt operator+(const CycInt& x, const CycInt& y) { return add(x, y); }
inline CycInt operator-(const CycInt& x, const CycInt& y) { return sub(x, y); }
inline CycInt operator*(const CycInt& x, const CycInt& y) { return mul(x, y); }
inline CycInt operator-(const CycInt& x) { return neg(x); }

/// Complex conjugation: exponent k -> (n - k) mod n. An involution.
CycInt conjugate(const CycInt& x);

/// The automorphism w_n -> w_n^j. Requires gcd(j, n) = 1 (std::domain_error
/// otherwise). j may be negative; it is reduced mod n first.
CycInt galois(const CycInt& x, std::int64_t j);

/// Rewrites x in Z[w_m] for a multiple m of the conductor (exponents scale
/// by m/n). std::domain_error when the conductor does not divide m.
CycInt embed(const CycInt& x, std::int64_t m);

/// Reduces the coefficients modulo the n-th cyclotomic polynomial so only
/// exponents 0..phi(n)-1 remain. Canonical: two values are equal as algebraic
/// numbers iff their canonical forms are identical.
CycInt canonical_form(const CycInt& x);

bool is_zero(const CycInt& x);
bool equals(const CycInt& x, const CycInt& y);

/// Multiplicative order of w_n^k, i.e. n / gcd(n, k). Requires 0 <= k < n.
std::int64_t order_of_term(std::int64_t n, std::int64_t k);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed by exact division of x^n - 1 by the Phi_d of proper divisors d,
/// cached per conductor; the cache is safe under concurrent use.
std::vector<Int> cyclotomic_polynomial(std::int64_t n);

} // namespace cyclo
