#pragma once

#include "qew/rational.hpp"
#include "qew/unipoly.hpp"

#include <string>
#include <vector>

namespace qew {

/// Truncated Maclaurin series with exact rational coefficients. The
/// truncation order is explicit: a series of order N stores exactly N+1
/// coefficients, zeros included. Arithmetic on mismatched orders is an error
/// rather than a silent truncation.
class Series {
public:
    explicit Series(int order) : coeffs_(order + 1, BigRational(0)) {}
    explicit Series(std::vector<BigRational> coeffs);
    static Series from_poly(const UniPoly& p, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigRational& operator[](int i) const { return coeffs_[i]; }
    BigRational& operator[](int i) { return coeffs_[i]; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }

    /// Lowest exponent with a nonzero coefficient; -1 if all stored
    /// coefficients vanish.
    int valuation() const;
    bool is_zero() const { return valuation() < 0; }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    /// Division lifts the common valuation; the result order shrinks by the
    /// divisor's valuation.
    Series operator/(const Series& o) const;
    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

    Series truncated(int new_order) const;

    /// Comma-separated coefficient list.
    std::string str() const;

private:
    void check_order(const Series& o) const;
    std::vector<BigRational> coeffs_;
};

enum class SeriesOp { add, sub, mul, div };
Series series_arith(SeriesOp op, const Series& u, const Series& v);

/// Unique square root with positive constant term; the constant term of u
/// must be the square of a nonzero rational.
Series series_sqrt(const Series& u);

/// Power-series solution of f = P1 + Q1*f + R1*f^2 by fixed-point iteration
/// from f = P1; requires ord_x(Q1) >= 1 and ord_x(R1) >= 1. This is the
/// combinatorial branch: the root analytic at x = 0.
Series series_fixed_point_solve(const UniPoly& P1, const UniPoly& Q1, const UniPoly& R1, int order);

}  // namespace qew
