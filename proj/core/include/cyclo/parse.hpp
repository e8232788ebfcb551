#pragma once

#include <string>

#include "cyclo/cyclotomic.hpp"

namespace cyclo {

/// Parses the expression grammar used everywhere downstream: signed
/// integer-coefficient sums of terms `w{n}^{k}`, exponent omitted means 1,
/// bare integers allowed, e.g. "1 - 2*w5^3 + w5". Terms with mixed
/// conductors are embedded into the lcm. Throws parse_error.
CycInt parse_cyclotomic(const std::string& text);

/// Inverse of parse_cyclotomic on the stored form: terms in ascending
/// exponent order, "0" for the empty sum.
std::string to_expression(const CycInt& x);

/// JSON object {"n": n, "coeffs": {"k": a_k, ...}}. Coefficients that do
/// not fit in 64 bits are emitted as decimal strings.
std::string to_json_string(const CycInt& x);
CycInt cyclotomic_from_json(const std::string& json_text);

} // namespace cyclo
