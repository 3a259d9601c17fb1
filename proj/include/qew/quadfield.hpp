#pragma once

#include "qew/ratfunc.hpp"
#include "qew/series.hpp"
#include "qew/unipoly.hpp"

#include <json.hpp>

#include <string>

namespace qew {

/// Element a + b*sqrt(delta) of the quadratic function field Q(x)[sqrt(delta)].
/// delta is squarefree with positive lowest-order coefficient and is shared
/// (structurally equal) across every element combined in one computation;
/// the representation (a, b) is unique.
class QuadElem {
public:
    /// qf_normalize: decomposes delta_raw = s^2 * sf and returns
    /// a + (b*s)*sqrt(sf); a constant perfect-square sf folds into a.
    static QuadElem normalized(const RatFunc& a, const RatFunc& b, const UniPoly& delta_raw);

    static QuadElem make(RatFunc a, RatFunc b, UniPoly delta);
    static QuadElem rational(RatFunc a, UniPoly delta);
    static QuadElem pure_root(RatFunc b, UniPoly delta);
    static QuadElem zero(UniPoly delta) { return rational(RatFunc(), std::move(delta)); }
    static QuadElem one(UniPoly delta) { return rational(RatFunc::constant(1), std::move(delta)); }

    const RatFunc& a() const { return a_; }
    const RatFunc& b() const { return b_; }
    const UniPoly& delta() const { return delta_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    QuadElem operator-() const;
    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator*(const QuadElem& o) const;
    QuadElem inverse() const;
    QuadElem operator/(const QuadElem& o) const { return *this * o.inverse(); }
    QuadElem scaled(const BigRational& c) const;
    QuadElem scaled(const RatFunc& r) const;

    /// d/dx, using (sqrt(delta))' = delta' * sqrt(delta) / (2 delta).
    QuadElem derivative_x() const;

    /// Maclaurin expansion; the square-root branch is the one whose constant
    /// term is the positive root of delta(0). Exact cancellation between the
    /// a and b parts is handled by clearing to a common denominator.
    Series to_series(int order) const;

    bool operator==(const QuadElem& o) const;

    std::string str() const;
    nlohmann::json to_json() const;
    static QuadElem from_json(const nlohmann::json& j);

private:
    QuadElem(RatFunc a, RatFunc b, UniPoly delta)
        : a_(std::move(a)), b_(std::move(b)), delta_(std::move(delta)) {}
    void check_same_field(const QuadElem& o) const;

    RatFunc a_, b_;
    UniPoly delta_;
};

/// Contract-named aliases for the quad-field operations.
QuadElem qf_normalize(const RatFunc& a, const RatFunc& b, const UniPoly& delta_raw);
QuadElem qf_mul(const QuadElem& u, const QuadElem& v);
QuadElem qf_invert(const QuadElem& u);
QuadElem qf_derivative_x(const QuadElem& u);
Series qf_to_series(const QuadElem& u, int order);

}  // namespace qew
