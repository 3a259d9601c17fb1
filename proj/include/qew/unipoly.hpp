#pragma once

#include "qew/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qew {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i; the highest-index coefficient is nonzero, and the zero
/// polynomial has an empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRational> coeffs);

    static UniPoly constant(const BigRational& c);
    static UniPoly constant(long c) { return constant(BigRational(c)); }
    static UniPoly one() { return constant(1); }
    static UniPoly monomial(const BigRational& c, int exponent);
    static UniPoly x() { return monomial(BigRational(1), 1); }
    /// Convenience for literals: coefficients ascending by exponent.
    static UniPoly from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    /// Lowest exponent with a nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;
    const BigRational& coeff(int i) const;
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    /// Sign of the lowest-order nonzero coefficient (0 for the zero polynomial).
    int low_sign() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const BigRational& c) const;
    UniPoly shifted(int k) const;  // multiply by x^k
    UniPoly pow(unsigned e) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly derivative() const;
    BigRational eval(const BigRational& v) const;
    BigRational eval_zero() const { return coeff(0); }

    std::string str(const char* var = "x") const;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

/// Quotient and remainder over Q; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Division known to be exact; throws std::logic_error on a nonzero remainder.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// GCD, normalized to integer-primitive with positive lowest-order
/// coefficient. gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// unipoly_derivative per the exact-kernel contract (alias of the member).
UniPoly unipoly_derivative(const UniPoly& p);

struct SquarefreeParts {
    UniPoly root;        // s
    UniPoly squarefree;  // sf, positive lowest-order coefficient
};

/// Writes p as s^2 * sf with sf squarefree (s^2 * sf equals p when the
/// lowest-order coefficient of p is positive, -p otherwise). Throws on zero
/// input.
SquarefreeParts squarefree_decompose(const UniPoly& p);

}  // namespace qew
