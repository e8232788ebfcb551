#include "cyclo/quadforms.hpp"

#include <stdexcept>
#include <string>

#include "cyclo/arith.hpp"

namespace cyclo {

std::string form_name(FormId id) {
    switch (id) {
        case FormId::poly1: return "poly1";
        case FormId::poly2: return "poly2";
        case FormId::diag: return "diag";
        case FormId::foursq: return "foursq";
        case FormId::a4: return "a4";
        case FormId::a3a1: return "a3a1";
    }
    return "?";
}

std::int64_t eval_poly1(std::int64_t a, std::int64_t b, std::int64_t c) {
    return a * a + a * b + b * b + c * c + a + b + c;
}

std::int64_t eval_poly2(std::int64_t a, std::int64_t b, std::int64_t c) {
    return a * a + b * b + c * c + a * b + b * c + c * a + a + b + c;
}

std::int64_t eval_a4(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t s = a + b + c + d;
    return a * a + b * b + c * c + d * d + s * s;
}

std::int64_t eval_a3a1(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return 2 * (a * a + (b + c) * a + b * b + b * c + c * c + d * d);
}

bool verify_solution(const QuadSolution& s) {
    const auto& v = s.variables;
    switch (s.form) {
        case FormId::poly1:
            return v.size() == 3 && eval_poly1(v[0], v[1], v[2]) == s.target;
        case FormId::poly2:
            return v.size() == 3 && eval_poly2(v[0], v[1], v[2]) == s.target;
        case FormId::diag:
            return v.size() == 3 && s.diag[0] * v[0] * v[0] + s.diag[1] * v[1] * v[1] +
                                            s.diag[2] * v[2] * v[2] ==
                                        s.target;
        case FormId::foursq:
            return v.size() == 4 &&
                   v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3] == s.target;
        case FormId::a4:
            return v.size() == 4 && eval_a4(v[0], v[1], v[2], v[3]) == s.target;
        case FormId::a3a1:
            return v.size() == 4 && eval_a3a1(v[0], v[1], v[2], v[3]) == s.target;
    }
    return false;
}

std::optional<std::array<std::int64_t, 3>> represent_diag(
    std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t t,
    const DiagConstraint& constraint) {
    if (d1 < 1 || d2 < 1 || d3 < 1) throw std::domain_error("represent_diag: d_i must be >= 1");
    if (t < 0) return std::nullopt;
    for (std::int64_t x = isqrt_ll(t / d1); x >= 0; --x) {
        std::int64_t rx = t - d1 * x * x;
        for (std::int64_t y = isqrt_ll(rx / d2); y >= 0; --y) {
            std::int64_t ry = rx - d2 * y * y;
            if (ry % d3 != 0) continue;
            std::int64_t zz = ry / d3;
            if (!is_square_ll(zz)) continue;
            std::int64_t z = isqrt_ll(zz);
            if (!constraint || constraint(x, y, z)) return std::array<std::int64_t, 3>{x, y, z};
        }
    }
    return std::nullopt;
}

std::array<std::int64_t, 4> four_squares(std::int64_t r) {
    if (r < 0) throw std::domain_error("four_squares: negative input");
    for (std::int64_t w = isqrt_ll(r); w >= 0; --w) {
        std::int64_t rw = r - w * w;
        for (std::int64_t x = std::min(w, isqrt_ll(rw)); x >= 0; --x) {
            std::int64_t rx = rw - x * x;
            for (std::int64_t y = std::min(x, isqrt_ll(rx)); y >= 0; --y) {
                std::int64_t rz = rx - y * y;
                if (!is_square_ll(rz)) continue;
                std::int64_t z = isqrt_ll(rz);
                if (z <= y) return {w, x, y, z};
            }
        }
    }
    throw std::logic_error("four_squares: no decomposition found");
}

namespace {

// Ternary solver used by the universal-polynomial reductions. Searches with
// z outermost (descending), then x descending, y determined; this is the
// axis order under which the reductions' published sample solutions arise.
std::optional<std::array<std::int64_t, 3>> diag_z_major(std::int64_t d1, std::int64_t d2,
                                                        std::int64_t d3, std::int64_t t) {
    for (std::int64_t z = isqrt_ll(t / d3); z >= 0; --z) {
        std::int64_t rz = t - d3 * z * z;
        for (std::int64_t x = isqrt_ll(rz / d1); x >= 0; --x) {
            std::int64_t rx = rz - d1 * x * x;
            if (rx % d2 != 0) continue;
            std::int64_t yy = rx / d2;
            if (!is_square_ll(yy)) continue;
            return std::array<std::int64_t, 3>{x, isqrt_ll(yy), z};
        }
    }
    return std::nullopt;
}

} // namespace

std::array<std::int64_t, 3> universal_poly1(std::int64_t m) {
    if (m < 0) throw std::domain_error("universal_poly1: m must be >= 0");
    std::int64_t t = 12 * m + 7;
    // x^2 + 3y^2 + 3z^2 = 12m+7 forces 3 to not divide x.
    auto sol = diag_z_major(1, 3, 3, t);
    if (!sol) throw std::logic_error("universal_poly1: ternary form not represented");
    auto [x, y, z] = *sol;
    if (x % 3 == 0) throw std::logic_error("universal_poly1: x divisible by 3");

    // 3b + 1 = +-x, picking the sign that makes b an integer.
    std::int64_t b = (x % 3 == 1) ? (x - 1) / 3 : (-x - 1) / 3;
    if (x % 2 == 0) {
        // b odd; exactly one of y, z is odd and it plays 2c+1.
        if (y % 2 == 0) std::swap(y, z);
    }
    // Now y is odd and z has the parity of b+1 in both cases.
    std::int64_t c = (y - 1) / 2;
    if ((z - b - 1) % 2 != 0) throw std::logic_error("universal_poly1: parity case failed");
    std::int64_t a = (z - b - 1) / 2;
    if (eval_poly1(a, b, c) != m) throw std::logic_error("universal_poly1: verification failed");
    return {a, b, c};
}

std::array<std::int64_t, 3> universal_poly2(std::int64_t m) {
    if (m < 0) throw std::domain_error("universal_poly2: m must be >= 0");
    std::int64_t t = 24 * m + 9;
    auto sol = diag_z_major(1, 2, 6, t);
    if (!sol) throw std::logic_error("universal_poly2: ternary form not represented");
    auto [x, y, z] = *sol;
    if (x % 2 == 0) throw std::logic_error("universal_poly2: x must be odd");

    // 4c + 1 = +-x.
    std::int64_t c = (x % 4 == 1) ? (x - 1) / 4 : (-x - 1) / 4;
    // 3b + c + 1 = +-y; 3 | x iff 3 | y, so one sign always works.
    std::int64_t b;
    if ((y - c - 1) % 3 == 0) {
        b = (y - c - 1) / 3;
    } else if ((-y - c - 1) % 3 == 0) {
        b = (-y - c - 1) / 3;
    } else {
        throw std::logic_error("universal_poly2: no sign of y fits");
    }
    // 2a + b + c + 1 = z; y and z share parity, which makes this even.
    if ((z - b - c - 1) % 2 != 0) throw std::logic_error("universal_poly2: parity case failed");
    std::int64_t a = (z - b - c - 1) / 2;
    if (eval_poly2(a, b, c) != m) throw std::logic_error("universal_poly2: verification failed");
    return {a, b, c};
}

namespace {

// 0, 1, -1, 2, -2, ... up to magnitude `radius` (positive sign first).
inline std::int64_t signed_probe(std::int64_t idx) {
    return (idx % 2 == 1) ? (idx + 1) / 2 : -idx / 2;
}

} // namespace

std::array<std::int64_t, 4> a4_form(std::int64_t t) {
    if (t < 0 || t % 2 != 0) throw std::domain_error("a4_form: t must be even and >= 0");
    std::int64_t radius = isqrt_ll(t);
    for (std::int64_t ia = 0; ia <= 2 * radius; ++ia) {
        std::int64_t a = signed_probe(ia);
        if (a * a > t) continue;
        for (std::int64_t ib = 0; ib <= 2 * radius; ++ib) {
            std::int64_t b = signed_probe(ib);
            if (a * a + b * b > t) continue;
            for (std::int64_t ic = 0; ic <= 2 * radius; ++ic) {
                std::int64_t c = signed_probe(ic);
                std::int64_t q = a * a + b * b + c * c;
                if (q > t) continue;
                // Remaining equation: 2d^2 + 2 s3 d + (q + s3^2 - t) = 0.
                std::int64_t s3 = a + b + c;
                std::int64_t disc = 2 * t - 2 * q - s3 * s3;
                if (disc < 0 || !is_square_ll(disc)) continue;
                std::int64_t root = isqrt_ll(disc);
                for (std::int64_t sign : {+1, -1}) {
                    std::int64_t num = -s3 + sign * root;
                    if (num % 2 != 0) continue;
                    std::int64_t d = num / 2;
                    if (eval_a4(a, b, c, d) == t) return {a, b, c, d};
                }
            }
        }
    }
    throw std::logic_error("a4_form: even target not represented");
}

std::array<std::int64_t, 4> a3a1_form(std::int64_t t) {
    if (t < 0 || t % 2 != 0) throw std::domain_error("a3a1_form: t must be even and >= 0");
    std::int64_t half = t / 2;
    std::int64_t radius = isqrt_ll(t);
    for (std::int64_t ia = 0; ia <= 2 * radius; ++ia) {
        std::int64_t a = signed_probe(ia);
        for (std::int64_t ib = 0; ib <= 2 * radius; ++ib) {
            std::int64_t b = signed_probe(ib);
            for (std::int64_t ic = 0; ic <= 2 * radius; ++ic) {
                std::int64_t c = signed_probe(ic);
                std::int64_t q = a * a + (b + c) * a + b * b + b * c + c * c;
                if (q < 0 || q > half) continue;
                if (!is_square_ll(half - q)) continue;
                std::int64_t d = isqrt_ll(half - q);
                if (eval_a3a1(a, b, c, d) == t) return {a, b, c, d};
            }
        }
    }
    throw std::logic_error("a3a1_form: even target not represented");
}

} // namespace cyclo
