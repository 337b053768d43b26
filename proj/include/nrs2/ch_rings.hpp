#pragma once

#include "nrs2/poly3.hpp"
#include "nrs2/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nrs2 {

// tau(i) = |i+1| - 1.  Reflection i -> -i-2 for i < -1, identity for i >= 0.
inline std::int64_t tau(std::int64_t i) { return (i >= -1 ? i + 1 : -i - 1) - 1; }

// Integer combination of basis elements h[i], i >= 0 (complete homogeneous
// symmetric functions in two variables, with mixed total degrees tracked
// implicitly by the embedding).
struct ChVec {
    std::map<std::int64_t, BigInt> c;

    bool is_zero() const { return c.empty(); }
    BigInt coeff(std::int64_t i) const;
    void add(std::int64_t i, const BigInt& v);

    friend bool operator==(const ChVec&, const ChVec&) = default;
    friend ChVec operator+(ChVec a, const ChVec& b);
    friend ChVec operator-(ChVec a, const ChVec& b);

    std::string str() const;  // "1*h[0] + 2*h[4]", ascending indices
};

// Integer combination of h~[i], i ranging over all integers.
struct TildeChVec {
    std::map<std::int64_t, BigInt> c;

    bool is_zero() const { return c.empty(); }
    BigInt coeff(std::int64_t i) const;
    void add(std::int64_t i, const BigInt& v);

    friend bool operator==(const TildeChVec&, const TildeChVec&) = default;
    friend TildeChVec operator+(TildeChVec a, const TildeChVec& b);
    friend TildeChVec operator-(TildeChVec a, const TildeChVec& b);
    friend TildeChVec operator*(const BigInt& k, TildeChVec a);

    std::string str() const;  // "3*h~[4] + 1*h~[-2]", ascending indices
};

ChVec ch_gen(std::int64_t i);        // h[i], requires i >= 0
TildeChVec tilde_gen(std::int64_t i);  // h~[i]

// h[i]*h[j] = sum_{k=0}^{min(i,j)} h[|j-i| + 2k], extended bilinearly.
ChVec mul_ch(const ChVec& a, const ChVec& b);

// h~[i]*h~[j]: for i >= 0 the sum h~[j-i+2k], k = 0..i; zero when i = -1;
// -(h~[tau(i)]*h~[j]) when i < -1.  The case split is on the left factor, and
// the product is not commutative (factors may differ by kernel elements).
TildeChVec mul_tilde(const TildeChVec& a, const TildeChVec& b);

// Index shift h~[i] -> h~[i+k].
TildeChVec shift(const TildeChVec& v, std::int64_t k);

// h~[i] -> sgn(i+1) * h[tau(i)]; additive, kills h~[-1].
ChVec L_map(const TildeChVec& v);

// Rewrites onto indices >= 0: h~[-1] -> 0 and h~[-i] -> -h~[i-2] for i >= 2.
// Fixed point on vectors already supported on nonnegative indices, and
// preserves the L_map image.
TildeChVec canonicalize(const TildeChVec& v);

// Kernel test for L_map, via the canonical rewrite.
bool ker_membership(const TildeChVec& v);

// sgn(a) * sum_{j=0}^{|a|-1} h~[c - b - |a| + 2j]; zero when a = 0.
TildeChVec U_elem(std::int64_t a, std::int64_t b, std::int64_t c);

// h[i] at total degree t is (u1*u2)^((t-i)/2) * sum_{k=0}^{i} u1^k u2^(i-k).
// Throws std::domain_error unless every index satisfies i <= t, i == t mod 2.
Poly3 embed(const ChVec& v, std::int64_t t);

// Error pair in the extended ring; components are kept canonical.
struct TildeErrPair {
    int n = 0;
    TildeChVec e0, e1;
};

TildeErrPair tilde_err_base();  // n = 0: (h~[2], h~[1])

using TildeMul = std::function<TildeChVec(const TildeChVec&, const TildeChVec&)>;

// One level of the cubic update pair
//   e0' = (e0^2 - e1^2) e0,   e1' = (2 e0^2 - h~[1] e1 e0) e1,
// products expanded left-to-right, the result canonicalized.  The multiply is
// a parameter so checks can exercise deliberately broken variants.
TildeErrPair tilde_err_step(const TildeErrPair& cur, const TildeMul& mul = mul_tilde);

std::vector<TildeErrPair> tilde_err_orbit(int n_max);

}  // namespace nrs2
