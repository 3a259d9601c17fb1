#pragma once

#include "qew/bipoly.hpp"
#include "qew/stepset.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace qew {

/// Parse failure with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position + 1)),
          position_(position) {}
    size_t position() const { return position_; }

private:
    size_t position_;
};

/// Polynomial expressions in x and q: integers, rationals a/b, + - * ^ and
/// parentheses; ^ takes nonnegative integer exponents; no implicit
/// multiplication.
BiPoly parse_poly_expr(std::string_view text);

/// Step-set literals: a bracketed list of pairs [1,s] or (1,s) with integer
/// s; the first component must be 1. Duplicates are silently dropped.
StepSet parse_step_set(std::string_view text);

}  // namespace qew
