#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cyclo {

enum class FormId { poly1, poly2, diag, foursq, a4, a3a1 };

std::string form_name(FormId id);

/// A solved instance of one of the quadratic forms, packaged so it can
/// always be re-checked by substitution.
struct QuadSolution {
    FormId form;
    std::array<std::int64_t, 3> diag;     // d1,d2,d3; meaningful for FormId::diag only
    std::vector<std::int64_t> variables;  // arity 3 or 4
    std::int64_t target;
};

/// Substitutes the variables into the identified form and compares with the
/// target. Every solver output must pass this.
bool verify_solution(const QuadSolution& s);

/// Value of a^2+ab+b^2+c^2+a+b+c.
std::int64_t eval_poly1(std::int64_t a, std::int64_t b, std::int64_t c);

/// Value of a^2+b^2+c^2+ab+bc+ca+a+b+c.
std::int64_t eval_poly2(std::int64_t a, std::int64_t b, std::int64_t c);

/// Value of a^2+b^2+c^2+d^2+(a+b+c+d)^2 (the A4 lattice form, doubled).
std::int64_t eval_a4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// Value of 2(a^2+(b+c)a+b^2+bc+c^2+d^2) (the A3+A1 lattice form, doubled).
std::int64_t eval_a3a1(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

/// Optional extra condition a representation must satisfy, e.g. "x odd" or
/// "x not divisible by 3". Applied to the tuple in (x, y, z) order.
using DiagConstraint = std::function<bool(std::int64_t, std::int64_t, std::int64_t)>;

/// First (x, y, z) with x,y,z >= 0 and d1 x^2 + d2 y^2 + d3 z^2 = t
/// satisfying the constraint, in descending lexicographic order (largest x
/// first, then largest y). Absence is a value, not an error.
std::optional<std::array<std::int64_t, 3>> represent_diag(
    std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t t,
    const DiagConstraint& constraint = nullptr);

/// Lagrange decomposition r = w^2+x^2+y^2+z^2 with w >= x >= y >= z >= 0,
/// lexicographically largest-first. Total for every r >= 0.
std::array<std::int64_t, 4> four_squares(std::int64_t r);

/// Integer solution of a^2+ab+b^2+c^2+a+b+c = m, m >= 0, via the reduction
/// to x^2+3y^2+3z^2 = 12m+7 with 3 not dividing x and the parity case split
/// on x. Result is verified by substitution before returning.
std::array<std::int64_t, 3> universal_poly1(std::int64_t m);

/// Integer solution of a^2+b^2+c^2+ab+bc+ca+a+b+c = m, m >= 0, via the
/// reduction to x^2+2y^2+6z^2 = 24m+9 with x odd. Verified by substitution.
std::array<std::int64_t, 3> universal_poly2(std::int64_t m);

/// Representation of an even t >= 0 by a^2+b^2+c^2+d^2+(a+b+c+d)^2.
/// std::domain_error for odd t. Bounded search, verified.
std::array<std::int64_t, 4> a4_form(std::int64_t t);

/// Representation of an even t >= 0 by 2(a^2+(b+c)a+b^2+bc+c^2+d^2).
/// std::domain_error for odd t. Bounded search, verified.
std::array<std::int64_t, 4> a3a1_form(std::int64_t t);

} // namespace cyclo
