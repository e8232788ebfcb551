#include "cyclo/trace_height.hpp"

#include <stdexcept>

#include "cyclo/arith.hpp"

namespace cyclo {

int mobius(std::int64_t n) {
    if (n < 1) throw std::domain_error("mobius: n must be positive");
    auto factors = factorize(n);
    int mu = 1;
    for (const auto& [p, e] : factors) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::domain_error("euler_phi: n must be positive");
    std::int64_t phi = n;
    for (const auto& [p, e] : factorize(n)) phi -= phi / p;
    return phi;
}

Rat mu_phi(std::int64_t n) {
    return make_rat(Int(mobius(n)), Int(euler_phi(n)));
}

Rat mean_trace(const CycInt& x) {
    Rat sum(0);
    std::int64_t n = x.conductor();
    for (const auto& [k, c] : x.coeffs()) sum += Rat(c) * mu_phi(order_of_term(n, k));
    return sum;
}

HeightReport cassels_height(const CycInt& x) {
    HeightReport report;
    report.conductor_used = x.conductor();
    report.term_count = x.term_count();
    report.value = mean_trace(mul(x, conjugate(x)));
    return report;
}

std::int64_t find_nonzero_trace_shift(const CycInt& x) {
    if (is_zero(x)) throw std::domain_error("find_nonzero_trace_shift: zero input");
    std::int64_t n = x.conductor();
    for (std::int64_t i = 0; i < n; ++i) {
        if (mean_trace(mul(CycInt::root_of_unity(n, i), x)) != 0) return i;
    }
    throw std::logic_error("no shift with nonzero trace found for a nonzero element");
}

namespace {

// Exhausts multisets of exponents e_1 <= ... <= e_b of w_M with b terms
// left. A sum of b roots of unity has height at most b^2, so branches whose
// remainder is heavier than that cannot close.
bool sum_of_roots_dfs(const CycInt& remaining, std::int64_t M, std::int64_t min_exp,
                      int budget) {
    if (is_zero(remaining)) return true;
    if (budget == 0) return false;
    if (cassels_height(remaining).value > Rat(budget) * Rat(budget)) return false;
    for (std::int64_t e = min_exp; e < M; ++e) {
        CycInt rest = sub(remaining, CycInt::root_of_unity(M, e));
        if (sum_of_roots_dfs(rest, M, e, budget - 1)) return true;
    }
    return false;
}

} // namespace

std::optional<int> min_roots_upper(const CycInt& x, std::int64_t search_conductor,
                                   int max_terms) {
    if (is_zero(x)) throw std::domain_error("min_roots_upper: zero input");
    if (search_conductor < 1 || search_conductor % x.conductor() != 0)
        throw std::domain_error("min_roots_upper: conductor does not divide search conductor");
    if (max_terms < 1) throw std::domain_error("min_roots_upper: max_terms must be positive");
    CycInt target = embed(x, search_conductor);
    for (int n_terms = 1; n_terms <= max_terms; ++n_terms) {
        if (sum_of_roots_dfs(target, search_conductor, 0, n_terms)) return n_terms;
    }
    return std::nullopt;
}

} // namespace cyclo
