#include "qew/halfqpoly.hpp"

#include <sstream>

namespace qew {

HalfQPoly HalfQPoly::one() { return term(BigInt(1), 0); }

HalfQPoly HalfQPoly::term(const BigInt& c, int64_t halves) {
    HalfQPoly p;
    p.add_term(c, halves);
    return p;
}

BigInt HalfQPoly::coeff_halves(int64_t halves) const {
    auto it = terms_.find(halves);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void HalfQPoly::add_term(const BigInt& c, int64_t halves) {
    if (c == 0) return;
    if (halves < 0) throw std::domain_error("negative exponent in area enumerator");
    auto it = terms_.find(halves);
    if (it == terms_.end()) {
        terms_.emplace(halves, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void HalfQPoly::add_shifted(const HalfQPoly& p, int64_t halves) {
    for (const auto& [h, c] : p.terms_) add_term(c, h + halves);
}

HalfQPoly HalfQPoly::operator+(const HalfQPoly& o) const {
    HalfQPoly r(*this);
    r.add_shifted(o, 0);
    return r;
}

HalfQPoly HalfQPoly::shifted(int64_t halves) const {
    HalfQPoly r;
    r.add_shifted(*this, halves);
    return r;
}

bool HalfQPoly::integer_exponents_only() const {
    for (const auto& [h, c] : terms_)
        if (h % 2 != 0) return false;
    return true;
}

BigInt HalfQPoly::eval_q1() const {
    BigInt s = 0;
    for (const auto& [h, c] : terms_) s += c;
    return s;
}

std::string HalfQPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [h, c] = *it;
        if (!first) os << " + ";
        first = false;
        if (c != 1 || h == 0) os << c.get_str();
        if (h == 0) continue;
        os << "q";
        if (h == 2) continue;
        if (h % 2 == 0)
            os << "^" << (h / 2);
        else
            os << "^(" << h << "/2)";
    }
    return os.str();
}

}  // namespace qew
