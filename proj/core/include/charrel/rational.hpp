#pragma once

#include <gmpxx.h>

#include <string>

namespace charrel {

// Arbitrary-precision integers and rationals. mpq_class keeps the canonical
// form we rely on everywhere: positive denominator, gcd(|num|, den) = 1.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigRat make_rat(BigInt num, BigInt den) {
    BigRat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

// mpz_class has no long long constructor; long is 64-bit on our targets.
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

inline bool is_perfect_square(const BigInt& v) {
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

BigInt factorial(int n);
BigInt binomial(int n, int k);

inline std::string to_string(const BigInt& v) { return v.get_str(); }
inline std::string to_string(const BigRat& q) { return q.get_str(); }

}  // namespace charrel
