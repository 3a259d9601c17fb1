#include "qew/series.hpp"

#include <sstream>

namespace qew {

Series::Series(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
}

Series Series::from_poly(const UniPoly& p, int order) {
    Series s(order);
    for (int i = 0; i <= order && i <= p.degree(); ++i) s.coeffs_[i] = p.coeff(i);
    return s;
}

int Series::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

void Series::check_order(const Series& o) const {
    if (coeffs_.size() != o.coeffs_.size()) throw std::invalid_argument("series order mismatch");
}

Series Series::operator+(const Series& o) const {
    check_order(o);
    Series r(*this);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

Series Series::operator-(const Series& o) const {
    check_order(o);
    Series r(*this);
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
}

Series Series::operator*(const Series& o) const {
    check_order(o);
    Series r(order());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; i + j < coeffs_.size(); ++j) r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return r;
}

Series Series::operator/(const Series& o) const {
    check_order(o);
    int w = o.valuation();
    if (w < 0) throw std::domain_error("division by identically-zero series");
    int uv = valuation();
    if (uv >= 0 && uv < w) throw std::domain_error("element not analytic at 0");
    int n = order() - w;
    Series r(n);
    // shifted long division: coefficients of (u/x^w) / (o/x^w)
    const BigRational& lead = o.coeffs_[w];
    for (int k = 0; k <= n; ++k) {
        BigRational acc = coeffs_[k + w];
        for (int i = 0; i < k; ++i) acc -= r.coeffs_[i] * o.coeffs_[k - i + w];
        r.coeffs_[k] = acc / lead;
    }
    return r;
}

Series Series::truncated(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("cannot extend a truncated series");
    Series r(new_order);
    for (int i = 0; i <= new_order; ++i) r.coeffs_[i] = coeffs_[i];
    return r;
}

std::string Series::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].get_str();
    }
    return os.str();
}

Series series_arith(SeriesOp op, const Series& u, const Series& v) {
    switch (op) {
        case SeriesOp::add: return u + v;
        case SeriesOp::sub: return u - v;
        case SeriesOp::mul: return u * v;
        case SeriesOp::div: return u / v;
    }
    throw std::logic_error("unknown series operation");
}

Series series_sqrt(const Series& u) {
    BigRational r0;
    if (u[0] == 0 || !rational_square_root(u[0], &r0))
        throw std::domain_error("constant term is not the square of a nonzero rational");
    int n = u.order();
    Series s(n);
    s[0] = r0;
    BigRational twice = r0 * 2;
    for (int k = 1; k <= n; ++k) {
        BigRational acc = u[k];
        for (int i = 1; i < k; ++i) acc -= s[i] * s[k - i];
        s[k] = acc / twice;
    }
    return s;
}

Series series_fixed_point_solve(const UniPoly& P1, const UniPoly& Q1, const UniPoly& R1, int order) {
    if ((!Q1.is_zero() && Q1.valuation() < 1) || (!R1.is_zero() && R1.valuation() < 1))
        throw std::domain_error("cannot select branch by iteration");
    Series p = Series::from_poly(P1, order);
    Series qs = Series::from_poly(Q1, order);
    Series rs = Series::from_poly(R1, order);
    Series f = p;
    // each pass fixes at least one more coefficient; order+1 passes suffice
    for (int it = 0; it <= order; ++it) {
        Series next = p + qs * f + rs * (f * f);
        if (next == f) break;
        f = next;
    }
    return f;
}

}  // namespace qew
