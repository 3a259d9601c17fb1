#include "qew/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace qew {

UniPoly::UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const BigRational& c) {
    UniPoly p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

UniPoly UniPoly::monomial(const BigRational& c, int exponent) {
    UniPoly p;
    if (c != 0) {
        p.coeffs_.assign(exponent + 1, BigRational(0));
        p.coeffs_[exponent] = c;
    }
    return p;
}

UniPoly UniPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<BigRational> cs;
    cs.reserve(coeffs.size());
    for (long c : coeffs) cs.emplace_back(c);
    return UniPoly(std::move(cs));
}

int UniPoly::valuation() const {
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

const BigRational& UniPoly::coeff(int i) const {
    static const BigRational zero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[i];
}

int UniPoly::low_sign() const {
    int v = valuation();
    return v < 0 ? 0 : sgn(coeffs_[v]);
}

UniPoly UniPoly::operator-() const {
    UniPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<BigRational> r(std::max(coeffs_.size(), o.coeffs_.size()), BigRational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<BigRational> r(coeffs_.size() + o.coeffs_.size() - 1, BigRational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const BigRational& c) const {
    if (c == 0) return UniPoly();
    UniPoly r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    UniPoly r;
    r.coeffs_.assign(coeffs_.size() + k, BigRational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc = one();
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<BigRational> r(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
    return UniPoly(std::move(r));
}

BigRational UniPoly::eval(const BigRational& v) const {
    BigRational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= v;
        acc += coeffs_[i];
    }
    return acc;
}

std::string UniPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRational& c = coeffs_[i];
        if (c == 0) continue;
        BigRational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (!unit || i == 0) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<BigRational> rem(a.coeffs());
    std::vector<BigRational> quo(a.degree() - b.degree() + 1, BigRational(0));
    const BigRational& lead = b.coeff(b.degree());
    for (int k = a.degree(); k >= b.degree();) {
        if (rem[k] != 0) {
            BigRational c = rem[k] / lead;
            quo[k - b.degree()] = c;
            for (int i = 0; i <= b.degree(); ++i) rem[k - b.degree() + i] -= c * b.coeff(i);
        }
        --k;
        while (static_cast<int>(rem.size()) > k + 1) rem.pop_back();
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("polynomial division expected to be exact");
    return q;
}

UniPoly unipoly_derivative(const UniPoly& p) { return p.derivative(); }

namespace {

// Integer coefficient vector, no trailing zeros.
using ZPoly = std::vector<BigInt>;

ZPoly to_int_primitive(const UniPoly& p) {
    BigInt lcm = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        BigInt v = c.get_num() * (lcm / c.get_den());
        z.push_back(v);
    }
    BigInt content = 0;
    for (const auto& v : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
        for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    return z;
}

void ztrim(ZPoly& z) {
    while (!z.empty() && z.back() == 0) z.pop_back();
}

void zremove_content(ZPoly& z) {
    BigInt content = 0;
    for (const auto& v : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
        for (auto& v : z) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0).
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
    const BigInt& lead = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        BigInt top = a.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (auto& v : a) v *= lead;
        for (int i = 0; i <= db; ++i) a[shift + i] -= top * b[i];
        ztrim(a);
    }
    return a;
}

UniPoly from_zpoly(const ZPoly& z) {
    std::vector<BigRational> cs;
    cs.reserve(z.size());
    for (const auto& v : z) cs.emplace_back(v);
    return UniPoly(std::move(cs));
}

int zlow_sign(const ZPoly& z) {
    for (const auto& v : z)
        if (v != 0) return sgn(v);
    return 0;
}

}  // namespace

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) return UniPoly();
    ZPoly za = a.is_zero() ? ZPoly() : to_int_primitive(a);
    ZPoly zb = b.is_zero() ? ZPoly() : to_int_primitive(b);
    if (za.size() < zb.size()) std::swap(za, zb);
    // primitive PRS keeps the remainders' coefficients small
    while (!zb.empty()) {
        ZPoly r = zpseudo_rem(za, zb);
        zremove_content(r);
        za = std::move(zb);
        zb = std::move(r);
    }
    if (zlow_sign(za) < 0)
        for (auto& v : za) v = -v;
    return from_zpoly(za);
}

namespace {

// Extract the square part of a positive integer: n = s^2 * k. Small primes are
// pulled out by trial division; a perfect-square remainder is folded whole.
void integer_square_part(const BigInt& n, BigInt& s, BigInt& k) {
    s = 1;
    k = n;
    for (long p = 2; p < 4096; p += (p == 2 ? 1 : 2)) {
        BigInt p2 = BigInt(p) * p;
        while (mpz_divisible_p(k.get_mpz_t(), p2.get_mpz_t())) {
            mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), p2.get_mpz_t());
            s *= p;
        }
        if (k < p2) break;
    }
    if (mpz_perfect_square_p(k.get_mpz_t())) {
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), k.get_mpz_t());
        s *= r;
        k = 1;
    }
}

}  // namespace

SquarefreeParts squarefree_decompose(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");

    UniPoly s0 = UniPoly::one();
    UniPoly sf0 = UniPoly::one();
    if (!p.is_constant()) {
        // Yun's algorithm over Q; factors come out integer-primitive via poly_gcd.
        UniPoly g = poly_gcd(p, p.derivative());
        if (g.is_constant()) {
            sf0 = from_zpoly(to_int_primitive(p));
            if (sf0.low_sign() < 0) sf0 = -sf0;
        } else {
            UniPoly c = exact_div(p, g);
            UniPoly d = exact_div(p.derivative(), g) - c.derivative();
            int i = 1;
            while (!c.is_constant()) {
                UniPoly ai = poly_gcd(c, d);
                c = exact_div(c, ai);
                d = exact_div(d, ai) - c.derivative();
                if (!ai.is_constant()) {
                    if (i % 2 == 1) sf0 = sf0 * ai;
                    s0 = s0 * ai.pow(i / 2);
                }
                ++i;
            }
        }
    }

    // Constant leftover: p = c * s0^2 * sf0. Split |c| = (sn/sd)^2 * kn/kd and
    // fold the square part into s, the squarefree kernel into sf.
    UniPoly prod = s0 * s0 * sf0;
    int dp = p.degree();
    BigRational c = p.coeff(dp) / prod.coeff(dp);
    BigRational ac = abs(c);
    BigInt sn, kn, sd, kd;
    integer_square_part(ac.get_num(), sn, kn);
    integer_square_part(ac.get_den(), sd, kd);

    UniPoly s = s0.scaled(make_rational(sn, sd * kd));
    UniPoly sf = sf0.scaled(BigRational(kn * kd));
    return {s, sf};
}

}  // namespace qew
