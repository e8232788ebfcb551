#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

/// Input text could not be parsed (expression grammar, JSON, CLI rationals).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured search or factorization bound was exhausted before a
/// decision could be made. Distinct from "no solution exists".
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cyclo
