#pragma once

#include "qew/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace qew {

/// Polynomial in q whose exponents live in (1/2)Z. The key counts halves, so
/// key h stands for q^(h/2). Coefficients are nonnegative path counts; no
/// zero coefficients are stored and all exponents are >= 0.
class HalfQPoly {
public:
    using TermMap = std::map<int64_t, BigInt>;

    HalfQPoly() = default;
    static HalfQPoly one();
    /// Single term c * q^(halves/2).
    static HalfQPoly term(const BigInt& c, int64_t halves);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    BigInt coeff_halves(int64_t halves) const;
    /// Coefficient of q^exponent (integer exponent).
    BigInt coeff(int64_t exponent) const { return coeff_halves(2 * exponent); }

    void add_term(const BigInt& c, int64_t halves);
    void add_shifted(const HalfQPoly& p, int64_t halves);

    HalfQPoly operator+(const HalfQPoly& o) const;
    /// Multiply by q^(halves/2).
    HalfQPoly shifted(int64_t halves) const;
    bool operator==(const HalfQPoly& o) const { return terms_ == o.terms_; }

    bool integer_exponents_only() const;
    /// Sum of coefficients, i.e. the value at q = 1.
    BigInt eval_q1() const;

    /// Descending-exponent display, e.g. "q^4 + q^3 + 3q^2 + 3q + 1";
    /// half-integer exponents print as "q^(5/2)".
    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace qew
