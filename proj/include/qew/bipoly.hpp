#pragma once

#include "qew/rational.hpp"
#include "qew/unipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace qew {

/// Exact bivariate polynomial in x and q, stored as a sparse term map with no
/// zero coefficients.
class BiPoly {
public:
    struct Key {
        int xe = 0;
        int qe = 0;
        auto operator<=>(const Key&) const = default;
    };
    using TermMap = std::map<Key, BigRational>;

    BiPoly() = default;

    static BiPoly constant(const BigRational& c);
    static BiPoly constant(long c) { return constant(BigRational(c)); }
    static BiPoly one() { return constant(1); }
    static BiPoly term(const BigRational& c, int xe, int qe);
    static BiPoly x() { return term(BigRational(1), 1, 0); }
    static BiPoly q() { return term(BigRational(1), 0, 1); }
    static BiPoly from_unipoly(const UniPoly& p);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    BigRational coeff(int xe, int qe) const;
    int degree_x() const;
    int degree_q() const;

    void add_term(const BigRational& c, int xe, int qe);

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly pow(unsigned e) const;
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

    /// p(x, 1): collapse all q powers.
    UniPoly eval_q1() const;

    /// Coefficients of eps^k in p(x, 1+eps), k = 0..order (zero-padded above
    /// the q-degree). Reassembling the full jet recovers p exactly.
    std::vector<UniPoly> eps_expand(int order) const;

    /// Canonical text form, reparseable by parse_poly_expr.
    std::string str() const;

private:
    TermMap terms_;
};

/// bipoly_eval_q1 / bipoly_eps_expand per the exact-kernel contract.
UniPoly bipoly_eval_q1(const BiPoly& p);
std::vector<UniPoly> bipoly_eps_expand(const BiPoly& p, int order);

}  // namespace qew
