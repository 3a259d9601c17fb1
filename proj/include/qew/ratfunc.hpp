#pragma once

#include "qew/unipoly.hpp"

#include <string>

namespace qew {

/// Rational function num/den in canonical form: the fraction is reduced and
/// the denominator is integer-primitive with positive lowest-order
/// coefficient, so equal values have equal representations.
class RatFunc {
public:
    RatFunc() : num_(), den_(UniPoly::one()) {}
    RatFunc(UniPoly num, UniPoly den);
    static RatFunc from_poly(UniPoly p);
    static RatFunc constant(const BigRational& c) { return from_poly(UniPoly::constant(c)); }
    static RatFunc constant(long c) { return constant(BigRational(c)); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc derivative() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Display form with integer-cleared content, e.g. "(1 - x)/(2*x^2)".
    std::string str(const char* var = "x") const;

private:
    UniPoly num_, den_;
};

/// ratfunc_normalize per the exact-kernel contract: the unique reduced
/// representative of num/den.
RatFunc ratfunc_normalize(const UniPoly& num, const UniPoly& den);

}  // namespace qew
