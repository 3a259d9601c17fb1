#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qew {

// Exact arbitrary-precision scalars. GMP canonical form matches the
// invariants we rely on: reduced fractions, denominator >= 1, zero is 0/1.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("division by zero");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

inline bool is_integer(const BigRational& r) { return r.get_den() == 1; }

inline BigInt to_integer(const BigRational& r) {
    if (!is_integer(r)) throw std::domain_error("value is not an integer: " + r.get_str());
    return r.get_num();
}

inline std::string to_string(const BigRational& r) { return r.get_str(); }
inline std::string to_string(const BigInt& n) { return n.get_str(); }

inline BigInt factorial(unsigned k) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// m (m-1) ... (m-k+1)
inline BigInt falling_factorial(const BigInt& m, unsigned k) {
    BigInt acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= m - static_cast<long>(i);
    return acc;
}

// If r == s^2 for a rational s, stores |s| in out and returns true.
inline bool rational_square_root(const BigRational& r, BigRational* out) {
    if (sgn(r) < 0) return false;
    const BigInt& num = r.get_num();
    const BigInt& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return false;
    if (out != nullptr) {
        BigInt rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *out = make_rational(rn, rd);
    }
    return true;
}

}  // namespace qew
