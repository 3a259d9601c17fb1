#include "qew/bipoly.hpp"

#include <sstream>

namespace qew {

BiPoly BiPoly::constant(const BigRational& c) { return term(c, 0, 0); }

BiPoly BiPoly::term(const BigRational& c, int xe, int qe) {
    BiPoly p;
    p.add_term(c, xe, qe);
    return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p) {
    BiPoly r;
    for (size_t i = 0; i < p.coeffs().size(); ++i) r.add_term(p.coeffs()[i], static_cast<int>(i), 0);
    return r;
}

BigRational BiPoly::coeff(int xe, int qe) const {
    auto it = terms_.find(Key{xe, qe});
    return it == terms_.end() ? BigRational(0) : it->second;
}

int BiPoly::degree_x() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.xe);
    return d;
}

int BiPoly::degree_q() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.qe);
    return d;
}

void BiPoly::add_term(const BigRational& c, int xe, int qe) {
    if (c == 0) return;
    if (xe < 0 || qe < 0) throw std::domain_error("negative exponent in bivariate polynomial");
    Key key{xe, qe};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(c, k.xe, k.qe);
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) r.add_term(ca * cb, ka.xe + kb.xe, ka.qe + kb.qe);
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly acc = one();
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

UniPoly BiPoly::eval_q1() const {
    std::vector<BigRational> cs;
    for (const auto& [k, c] : terms_) {
        if (k.xe >= static_cast<int>(cs.size())) cs.resize(k.xe + 1, BigRational(0));
        cs[k.xe] += c;
    }
    return UniPoly(std::move(cs));
}

std::vector<UniPoly> BiPoly::eps_expand(int order) const {
    std::vector<std::vector<BigRational>> jets(order + 1);
    for (const auto& [k, c] : terms_) {
        // q^qe = (1+eps)^qe
        int top = std::min(k.qe, order);
        for (int j = 0; j <= top; ++j) {
            BigRational w = c * BigRational(binomial(k.qe, j));
            auto& jet = jets[j];
            if (k.xe >= static_cast<int>(jet.size())) jet.resize(k.xe + 1, BigRational(0));
            jet[k.xe] += w;
        }
    }
    std::vector<UniPoly> out;
    out.reserve(order + 1);
    for (auto& jet : jets) out.emplace_back(std::move(jet));
    return out;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        BigRational a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        bool has_var = k.xe > 0 || k.qe > 0;
        if (!unit || !has_var) os << a.get_str();
        bool need_star = !unit;
        if (k.xe > 0) {
            if (need_star) os << "*";
            os << "x";
            if (k.xe > 1) os << "^" << k.xe;
            need_star = true;
        }
        if (k.qe > 0) {
            if (need_star) os << "*";
            os << "q";
            if (k.qe > 1) os << "^" << k.qe;
        }
    }
    return os.str();
}

UniPoly bipoly_eval_q1(const BiPoly& p) { return p.eval_q1(); }

std::vector<UniPoly> bipoly_eps_expand(const BiPoly& p, int order) { return p.eps_expand(order); }

}  // namespace qew
