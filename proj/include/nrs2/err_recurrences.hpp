#pragma once

#include "nrs2/poly3.hpp"
#include "nrs2/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nrs2 {

// One level of the error orbit: components indexed 0, 1, -1.
template <typename V>
struct ErrTriple {
    int n = 0;
    V e0, e1, em1;
};

template <typename V>
struct UValues {
    V u1, u2, u3;
};

template <typename V>
V ring_one();

template <>
inline Rational ring_one<Rational>() {
    return Rational(1);
}

template <>
inline Poly3 ring_one<Poly3>() {
    return Poly3::one();
}

template <>
inline BigInt ring_one<BigInt>() {
    return BigInt(1);
}

template <typename V>
V ring_pow(V base, std::uint64_t e) {
    // e >= 1; exponents here are mostly powers of two, so strip trailing
    // zeros with plain squarings first.
    while ((e & 1) == 0) {
        base = base * base;
        e >>= 1;
    }
    V result = base;
    e >>= 1;
    while (e) {
        base = base * base;
        if (e & 1) result = result * base;
        e >>= 1;
    }
    return result;
}

// ---- raw orbit (inhomogeneous in u3; degrees 3 -> 14 / 4 -> 15 per level) ----

template <typename V>
ErrTriple<V> orr_base(const UValues<V>& u) {
    V s = u.u1 + u.u2 + u.u3;
    V e2 = u.u1 * u.u2 + u.u1 * u.u3 + u.u2 * u.u3;
    ErrTriple<V> t;
    t.n = 0;
    t.e0 = (u.u1 * u.u1 + u.u1 * u.u2 + u.u2 * u.u2) * u.u3;
    t.e1 = (u.u1 + u.u2) * u.u3 * s;
    t.em1 = u.u1 * u.u2 * e2;
    return t;
}

template <typename V>
ErrTriple<V> orr_step(const ErrTriple<V>& t, const UValues<V>& u) {
    V s = u.u1 + u.u2 + u.u3;
    V p12 = u.u1 * u.u2;
    V q = p12 * u.u3;            // u1 u2 u3
    V q3 = q * u.u3;             // u1 u2 u3^2
    V mix = p12 - u.u1 * u.u3 - u.u2 * u.u3;
    const V &e0 = t.e0, &e1 = t.e1, &em1 = t.em1;
    V e0sq = e0 * e0;
    ErrTriple<V> r;
    r.n = t.n + 1;
    r.e0 = -(q3 * e0 * em1 * e1) + q * s * e0sq * em1 + q3 * s * e0sq * e0;
    r.e1 = u.u3 * s * mix * e0 * e1 * em1 + u.u3 * u.u3 * s * s * e0sq * em1 +
           q3 * s * e0sq * e1;
    r.em1 = em1 * ((u.u1 - u.u3) * (u.u2 - u.u3) * s * em1 * em1 - q3 * e1 * em1 +
                   u.u3 * s * (p12 + p12 + p12 - u.u1 * u.u3 - u.u2 * u.u3) * e0 * em1 +
                   (q3 + q3) * s * e0sq);
    return r;
}

// ---- reduced orbit (u3-degrees follow 2*3^n - 1 and 2(3^n - 2^n)) ----

template <typename V>
ErrTriple<V> mrr_base(const UValues<V>& u) {
    ErrTriple<V> t;
    t.n = 0;
    t.e0 = u.u1 * u.u1 + u.u1 * u.u2 + u.u2 * u.u2;
    t.e1 = u.u1 + u.u2;
    t.em1 = ring_one<V>() + u.u3 * (u.u1 + u.u2);
    return t;
}

template <typename V>
ErrTriple<V> mrr_step(const ErrTriple<V>& t, const UValues<V>& u) {
    V p = ring_pow(u.u3, std::uint64_t{1} << (t.n + 1));  // u3^(2^(n+1))
    V q = p * p;                                          // u3^(2^(n+2))
    V r3 = u.u3 * p;                                      // u3^(1 + 2^(n+1))
    V s12 = u.u1 + u.u2;
    V p12 = u.u1 * u.u2;
    const V &e0 = t.e0, &e1 = t.e1, &em1 = t.em1;
    V e0sq = e0 * e0;
    V m01 = em1 * e0;
    V m11 = em1 * e1;
    V msq = em1 * em1;
    ErrTriple<V> r;
    r.n = t.n + 1;
    r.e0 = e0 * (m01 - m11 * p12 * u.u3 + e0sq * p);
    r.e1 = e0 * (m11 + m01 * u.u3 - m11 * s12 * u.u3 + e0 * e1 * p);
    r.em1 = em1 * (msq - msq * s12 * u.u3 + msq * p12 * u.u3 * u.u3 + (m01 + m01 + m01) * p +
                   (e0sq + e0sq) * q - m01 * s12 * r3 - m11 * p12 * r3);
    return r;
}

// ---- top-layer orbit in u1, u2 only ----

template <typename V>
struct UValues2 {
    V u1, u2;
};

template <typename V>
ErrTriple<V> lead_base(const UValues2<V>& u) {
    ErrTriple<V> t;
    t.n = 0;
    t.e0 = u.u1 * u.u1 + u.u1 * u.u2 + u.u2 * u.u2;
    t.e1 = u.u1 + u.u2;
    t.em1 = u.u1 + u.u2;
    return t;
}

template <typename V>
ErrTriple<V> lead_step(const ErrTriple<V>& t, const UValues2<V>& u) {
    V s12 = u.u1 + u.u2;
    V p12 = u.u1 * u.u2;
    const V &e0 = t.e0, &e1 = t.e1, &em1 = t.em1;
    V e0sq = e0 * e0;
    ErrTriple<V> r;
    r.n = t.n + 1;
    r.e0 = (e0sq - p12 * em1 * e1) * e0;
    r.e1 = e0sq * (em1 + e1) - s12 * em1 * e1 * e0;
    r.em1 = em1 * (p12 * (em1 * em1 - em1 * e1) + e0sq + e0sq - s12 * e0 * em1);
    return r;
}

// Two-component form, valid because the -1 and 1 components coincide.
template <typename V>
struct LeadPair {
    int n = 0;
    V e0, e1;
};

template <typename V>
LeadPair<V> lead_pair_base(const UValues2<V>& u) {
    return {0, u.u1 * u.u1 + u.u1 * u.u2 + u.u2 * u.u2, u.u1 + u.u2};
}

template <typename V>
LeadPair<V> lead_pair_step(const LeadPair<V>& t, const UValues2<V>& u) {
    V e0sq = t.e0 * t.e0;
    LeadPair<V> r;
    r.n = t.n + 1;
    r.e0 = (e0sq - u.u1 * u.u2 * t.e1 * t.e1) * t.e0;
    r.e1 = (e0sq + e0sq - (u.u1 + u.u2) * t.e1 * t.e0) * t.e1;
    return r;
}

// ---- concrete instantiations and the reduction pipeline ----

UValues<Poly3> poly_u();
UValues2<Poly3> poly_u2();
UValues<Rational> rational_u(const Rational& u1, const Rational& u2, const Rational& u3);

ErrTriple<Poly3> mrr_base_poly();  // (u1^2+u1u2+u2^2, u1+u2, 1+u3(u1+u2))
std::vector<ErrTriple<Poly3>> orr_orbit_poly(int n_max);
std::vector<ErrTriple<Poly3>> mrr_orbit_poly(int n_max);
std::vector<ErrTriple<Poly3>> lead_orbit_poly(int n_max);

// Component-wise top u3-layer of a reduced-orbit level, as polynomials in
// u1, u2 alone (em1 drops from u3-degree 2*3^n-1, the others from 2(3^n-2^n)).
ErrTriple<Poly3> top_layer(const ErrTriple<Poly3>& t);

// Exponents removed from a raw-orbit level to reach the reduced orbit:
// divide out s = u1+u2+u3, substitute u3 -> u1 u2 u3, divide out u1 u2 and
// trailing u3 powers.  Each division is checked exact.
struct ReductionTrace {
    int n = 0;
    std::array<std::int64_t, 3> s_exp{};    // order: e0, e1, em1
    std::array<std::int64_t, 3> u12_exp{};
    std::array<std::int64_t, 3> u3_exp{};
    ErrTriple<Poly3> reduced;
};

ReductionTrace reduce_raw_level(const ErrTriple<Poly3>& raw);

// Coefficient rows of the 0-component of the top-layer orbit: row n lists the
// coefficients of u1^(d-k) u2^k, k = 0..d, d = 2*3^n.
std::vector<std::vector<BigInt>> lead_coeff_rows(int n_max);
std::string lead_coeff_csv(int n_max);

}  // namespace nrs2
