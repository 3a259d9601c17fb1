#include "qew/quadfield.hpp"

#include <sstream>

namespace qew {

QuadElem QuadElem::make(RatFunc a, RatFunc b, UniPoly delta) {
    if (delta.is_zero()) throw std::domain_error("zero discriminant");
    return QuadElem(std::move(a), std::move(b), std::move(delta));
}

QuadElem QuadElem::rational(RatFunc a, UniPoly delta) {
    return make(std::move(a), RatFunc(), std::move(delta));
}

QuadElem QuadElem::pure_root(RatFunc b, UniPoly delta) {
    return make(RatFunc(), std::move(b), std::move(delta));
}

QuadElem QuadElem::normalized(const RatFunc& a, const RatFunc& b, const UniPoly& delta_raw) {
    if (delta_raw.is_zero()) throw std::domain_error("zero discriminant");
    auto [s, sf] = squarefree_decompose(delta_raw);
    if (!(s * s * sf == delta_raw))
        throw std::domain_error(
            "discriminant is negative at lowest order; square root not representable");
    RatFunc bs = b * RatFunc::from_poly(s);
    if (sf.is_constant()) {
        BigRational root;
        if (!rational_square_root(sf.coeff(0), &root))
            return make(a, bs, sf);  // e.g. sqrt(2): still a quadratic extension
        return rational(a + bs * RatFunc::constant(root), UniPoly::one());
    }
    return make(a, bs, sf);
}

void QuadElem::check_same_field(const QuadElem& o) const {
    if (!(delta_ == o.delta_)) throw std::domain_error("mismatched delta");
}

QuadElem QuadElem::operator-() const { return QuadElem(-a_, -b_, delta_); }

QuadElem QuadElem::operator+(const QuadElem& o) const {
    check_same_field(o);
    return QuadElem(a_ + o.a_, b_ + o.b_, delta_);
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    check_same_field(o);
    return QuadElem(a_ - o.a_, b_ - o.b_, delta_);
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    check_same_field(o);
    RatFunc d = RatFunc::from_poly(delta_);
    return QuadElem(a_ * o.a_ + b_ * o.b_ * d, a_ * o.b_ + b_ * o.a_, delta_);
}

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in quadratic field");
    RatFunc d = RatFunc::from_poly(delta_);
    RatFunc norm = a_ * a_ - b_ * b_ * d;
    // norm = 0 would force sqrt(delta) rational, impossible for squarefree
    // nonconstant delta
    RatFunc ni = norm.inverse();
    return QuadElem(a_ * ni, (-b_) * ni, delta_);
}

QuadElem QuadElem::scaled(const BigRational& c) const { return scaled(RatFunc::constant(c)); }

QuadElem QuadElem::scaled(const RatFunc& r) const { return QuadElem(a_ * r, b_ * r, delta_); }

QuadElem QuadElem::derivative_x() const {
    RatFunc correction = b_ * RatFunc(delta_.derivative(), delta_.scaled(BigRational(2)));
    return QuadElem(a_.derivative(), b_.derivative() + correction, delta_);
}

Series QuadElem::to_series(int order) const {
    // (A + B*sqrt(delta))/C with polynomial A, B, C
    UniPoly A = a_.num() * b_.den();
    UniPoly B = b_.num() * a_.den();
    UniPoly C = a_.den() * b_.den();
    int v = C.valuation();
    int m = order + v;

    Series num = Series::from_poly(A, m);
    if (!B.is_zero()) {
        BigRational d0 = delta_.coeff(0);
        if (d0 == 0 || !rational_square_root(d0, nullptr))
            throw std::domain_error("delta(0) is not the square of a nonzero rational");
        Series root = series_sqrt(Series::from_poly(delta_, m));
        num = num + Series::from_poly(B, m) * root;
    }
    int uv = num.valuation();
    if (uv >= 0 && uv < v) throw std::domain_error("element not analytic at 0");
    return num / Series::from_poly(C, m);
}

bool QuadElem::operator==(const QuadElem& o) const {
    return a_ == o.a_ && b_ == o.b_ && delta_ == o.delta_;
}

std::string QuadElem::str() const {
    if (b_.is_zero()) return a_.str();
    std::ostringstream os;
    if (!a_.is_zero()) os << a_.str() << " + ";
    os << b_.str() << "*sqrt(" << delta_.str() << ")";
    return os.str();
}

namespace {

nlohmann::json poly_to_json(const UniPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

UniPoly poly_from_json(const nlohmann::json& arr) {
    std::vector<BigRational> cs;
    for (const auto& item : arr) {
        BigRational c(item.get<std::string>());
        c.canonicalize();
        cs.push_back(c);
    }
    return UniPoly(std::move(cs));
}

}  // namespace

nlohmann::json QuadElem::to_json() const {
    return {{"delta", poly_to_json(delta_)},
            {"a_num", poly_to_json(a_.num())},
            {"a_den", poly_to_json(a_.den())},
            {"b_num", poly_to_json(b_.num())},
            {"b_den", poly_to_json(b_.den())}};
}

QuadElem QuadElem::from_json(const nlohmann::json& j) {
    RatFunc a(poly_from_json(j.at("a_num")), poly_from_json(j.at("a_den")));
    RatFunc b(poly_from_json(j.at("b_num")), poly_from_json(j.at("b_den")));
    return make(std::move(a), std::move(b), poly_from_json(j.at("delta")));
}

QuadElem qf_normalize(const RatFunc& a, const RatFunc& b, const UniPoly& delta_raw) {
    return QuadElem::normalized(a, b, delta_raw);
}

QuadElem qf_mul(const QuadElem& u, const QuadElem& v) { return u * v; }

QuadElem qf_invert(const QuadElem& u) { return u.inverse(); }

QuadElem qf_derivative_x(const QuadElem& u) { return u.derivative_x(); }

Series qf_to_series(const QuadElem& u, int order) { return u.to_series(order); }

}  // namespace qew
