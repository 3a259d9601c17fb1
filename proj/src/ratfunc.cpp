#include "qew/ratfunc.hpp"

#include <sstream>

namespace qew {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num_.is_zero()) {
        den_ = UniPoly::one();
        return;
    }
    UniPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    // scale so the denominator is integer-primitive with positive low coefficient
    BigInt lcm = 1;
    for (const auto& c : den_.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    BigInt content = 0;
    for (const auto& c : den_.coeffs()) {
        BigInt v = c.get_num() * (lcm / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
    BigRational scale = make_rational(lcm, content);
    int v = den_.valuation();
    if (sgn(den_.coeff(v)) < 0) scale = -scale;
    if (scale != 1) {
        num_ = num_.scaled(scale);
        den_ = den_.scaled(scale);
    }
}

RatFunc RatFunc::from_poly(UniPoly p) { return RatFunc(std::move(p), UniPoly::one()); }

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero polynomial");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

std::string RatFunc::str(const char* var) const {
    // clear rational content from the numerator for display
    BigInt lcm = 1;
    for (const auto& c : num_.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    UniPoly n = num_.scaled(BigRational(lcm));
    UniPoly d = den_.scaled(BigRational(lcm));
    if (d.is_one()) {
        std::string s = n.str(var);
        if (s.find(' ') != std::string::npos) return "(" + s + ")";
        return s;
    }
    std::ostringstream os;
    os << "(" << n.str(var) << ")/(" << d.str(var) << ")";
    return os.str();
}

RatFunc ratfunc_normalize(const UniPoly& num, const UniPoly& den) { return RatFunc(num, den); }

}  // namespace qew
