#pragma once

#include <gmpxx.h>

#include <string>

namespace cyclo {

/// Arbitrary-precision integer. All coefficient and counting arithmetic in
/// the library runs on this type; nothing is ever rounded.
using Int = mpz_class;

/// Exact rational number, always kept canonical (positive denominator,
/// gcd(|num|, den) = 1). Heights and mean traces live here.
using Rat = mpq_class;

/// Builds a canonical rational from a numerator/denominator pair.
Rat make_rat(const Int& num, const Int& den);

/// Renders q as "num/den" with the denominator always present ("0/1", "3/2").
std::string rat_string(const Rat& q);

/// Parses "num/den" or a bare integer. Throws parse_error on malformed input.
Rat rat_from_string(const std::string& text);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

} // namespace cyclo
