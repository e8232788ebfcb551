#include "cyclo/limit_points.hpp"

#include <stdexcept>

#include "cyclo/arith.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/trace_height.hpp"

namespace cyclo {

Rat cross_term(const CycInt& g1, const CycInt& g2, const CycInt& omega) {
    if (!omega.is_unit_root_form())
        throw std::domain_error("cross_term: multiplier is not a single +-1 root-of-unity term");
    CycInt omega_inv = conjugate(omega);  // inverse of a unit-root form
    Rat t1 = mean_trace(mul(omega_inv, mul(g1, conjugate(g2))));
    Rat t2 = mean_trace(mul(omega, mul(conjugate(g1), g2)));
    return t1 + t2;
}

std::vector<LimitStep> two_term_sequence(const CycInt& g1, const CycInt& g2, Side side,
                                         int count) {
    if (count < 1) throw std::domain_error("two_term_sequence: count must be positive");
    if (is_zero(g1) || is_zero(g2))
        throw std::domain_error("two_term_sequence: inputs must be nonzero");

    std::int64_t n = lcm_ll(g1.conductor(), g2.conductor());
    CycInt delta = mul(conjugate(embed(g1, n)), embed(g2, n));
    std::int64_t shift = find_nonzero_trace_shift(delta);
    Rat tau = mean_trace(mul(CycInt::root_of_unity(n, shift), delta));

    // The odd-prime sequence moves by -2 tau/(l*-1), the doubled one by
    // +2 tau/(l*-1); pick whichever lands on the requested side.
    bool doubled = (side == Side::above) == (tau > 0);

    Rat m1 = cassels_height(g1).value;
    Rat m2 = cassels_height(g2).value;
    Rat limit = m1 + m2;

    std::vector<LimitStep> steps;
    steps.reserve(count);
    std::int64_t q = 2;
    while (static_cast<int>(steps.size()) < count) {
        q = next_prime(q);
        if (q == 2 || n % q == 0) continue;

        CycInt omega = mul(CycInt::root_of_unity(doubled ? 2 * q : q, 1),
                           CycInt::root_of_unity(n, shift));
        LimitStep step;
        step.ell_star = q;
        step.shift = shift;
        step.doubled = doubled;
        step.height = cassels_height(add(g1, mul(omega, g2))).value;
        step.cross = cross_term(g1, g2, omega);
        step.predicted_cross = make_rat(doubled ? 2 : -2, q - 1) * tau;

        if (step.height != limit + step.cross)
            throw std::logic_error("two_term_sequence: height decomposition identity failed");
        if (step.cross != step.predicted_cross)
            throw std::logic_error("two_term_sequence: cross term closed form failed");
        if (step.cross == 0 || (side == Side::above ? step.cross < 0 : step.cross > 0))
            throw std::logic_error("two_term_sequence: approach side violated");
        steps.push_back(std::move(step));
    }
    return steps;
}

std::vector<MultiTermStep> multi_term_limit(const std::vector<CycInt>& gs, int steps) {
    if (gs.empty()) throw std::domain_error("multi_term_limit: no terms given");
    if (steps < 1) throw std::domain_error("multi_term_limit: steps must be positive");
    if (steps > 60) throw resource_error("multi_term_limit: step budget too large");

    std::int64_t t = 1;
    Rat limit(0);
    for (const auto& g : gs) {
        t = lcm_ll(t, g.conductor());
        limit += cassels_height(g).value;
    }

    std::vector<MultiTermStep> out;
    out.reserve(steps);
    for (int j = 1; j <= steps; ++j) {
        std::int64_t threshold = std::max(t, std::int64_t(1) << (j + 1));
        MultiTermStep step;
        CycInt beta = gs[0];
        std::int64_t q = threshold;
        std::int64_t conductor = t;
        for (std::size_t k = 1; k < gs.size(); ++k) {
            q = next_prime(q);
            if (conductor > (std::int64_t(1) << 62) / q)
                throw resource_error("multi_term_limit: conductor would overflow at this step");
            conductor *= q;
            step.orders.push_back(q);
            beta = add(beta, mul(gs[k], CycInt::root_of_unity(q, 1)));
        }
        step.height = cassels_height(beta).value;
        step.deviation = rat_abs(step.height - limit);
        out.push_back(std::move(step));
    }
    return out;
}

} // namespace cyclo
