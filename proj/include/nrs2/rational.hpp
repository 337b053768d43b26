#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace nrs2 {

// Exact scalars. GMP-backed so deep recurrence orbits stay fast; mpq keeps
// every value in lowest terms with a positive denominator.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational rational_from_string(const std::string& s) { return Rational(s); }

// 2^k and 3^k as exact integers (k small, but results feed index arithmetic
// that overflows int64 past n ~ 40; orbit levels stay tiny so int64 is fine).
inline std::int64_t pow2(int k) { return std::int64_t(1) << k; }
inline std::int64_t pow3(int k) {
    std::int64_t r = 1;
    while (k-- > 0) r *= 3;
    return r;
}

}  // namespace nrs2
