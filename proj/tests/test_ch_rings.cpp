#include "doctest.h"

#include "nrs2/ch_rings.hpp"
#include "nrs2/poly3.hpp"

using namespace nrs2;

namespace {
TildeChVec tg(std::int64_t i) { return tilde_gen(i); }
}  // namespace

TEST_CASE("index fold") {
    CHECK(tau(0) == 0);
    CHECK(tau(3) == 3);
    CHECK(tau(-1) == -1);
    CHECK(tau(-2) == 0);
    CHECK(tau(-5) == 3);
    for (std::int64_t i = -9; i <= 9; ++i) CHECK(tau(-i - 2) == tau(i));
}

TEST_CASE("extended basis products") {
    CHECK(mul_tilde(tg(-1), tg(5)).is_zero());
    CHECK(mul_tilde(tg(2), tg(2)) == tg(0) + tg(2) + tg(4));
    TildeChVec want;
    want.add(-1, BigInt(-1));
    want.add(1, BigInt(-1));
    CHECK(mul_tilde(tg(-3), tg(0)) == want);
    // bilinearity against a scalar multiple
    CHECK(mul_tilde(BigInt(3) * tg(2), tg(2)) == BigInt(3) * (tg(0) + tg(2) + tg(4)));
}

TEST_CASE("folded basis products") {
    CHECK(mul_ch(ch_gen(1), ch_gen(2)) == ch_gen(1) + ch_gen(3));
    CHECK(mul_ch(ch_gen(2), ch_gen(2)) == ch_gen(0) + ch_gen(2) + ch_gen(4));
    CHECK(mul_ch(ch_gen(0), ch_gen(7)) == ch_gen(7));
}

TEST_CASE("fold homomorphism on sample vectors") {
    CHECK(L_map(tg(-1)).is_zero());
    ChVec mh1;
    mh1.add(1, BigInt(-1));
    CHECK(L_map(tg(-3)) == mh1);
    CHECK(L_map(tg(4)) == ch_gen(4));
    TildeChVec a = tg(2) + tg(-3);
    TildeChVec b = tg(0) + tg(5);
    CHECK(L_map(mul_tilde(a, b)) == mul_ch(L_map(a), L_map(b)));
}

TEST_CASE("kernel canonicalization") {
    CHECK(canonicalize(tg(-2) + tg(0)).is_zero());
    TildeChVec m3;
    m3.add(3, BigInt(-1));
    CHECK(canonicalize(tg(-5)) == m3);
    CHECK(canonicalize(tg(-1)).is_zero());
    CHECK(ker_membership(tg(-1)));
    CHECK(ker_membership(tg(-6) + tg(4)));
    CHECK_FALSE(ker_membership(tg(2)));
    TildeChVec v = BigInt(2) * tg(-4) + tg(2) - tg(7);
    CHECK(L_map(canonicalize(v)) == L_map(v));
}

TEST_CASE("shift operator") {
    CHECK(shift(tg(2) + tg(4), -1) == tg(1) + tg(3));
    TildeChVec v = tg(-2) + BigInt(5) * tg(3);
    CHECK(shift(shift(v, 4), -4) == v);
    CHECK(shift(v, 0) == v);
}

TEST_CASE("exchange bracket examples") {
    CHECK(U_elem(0, 7, -3).is_zero());
    CHECK(U_elem(2, 0, 0) == tg(-2) + tg(0));
    TildeChVec want;
    want.add(-1, BigInt(-1));
    CHECK(U_elem(-1, 1, 1) == want);
    // defining identity at one sample point
    std::int64_t a = 3, b = -2, c = 4;
    CHECK(mul_tilde(tg(a + b), tg(c)) - mul_tilde(tg(b), tg(a + c)) == U_elem(a, b, c));
}

TEST_CASE("embedding into two-variable polynomials") {
    Poly3 u1 = Poly3::u1(), u2 = Poly3::u2();
    CHECK(embed(ch_gen(2), 2) == u1 * u1 + u1 * u2 + u2 * u2);
    CHECK(embed(ch_gen(0), 2) == u1 * u2);
    CHECK(embed(ch_gen(1), 1) == u1 + u2);
    CHECK_THROWS(embed(ch_gen(1), 2));  // parity mismatch
    CHECK_THROWS(embed(ch_gen(4), 2));  // index exceeds degree
    CHECK(embed(mul_ch(ch_gen(2), ch_gen(2)), 4) == embed(ch_gen(2), 2) * embed(ch_gen(2), 2));
}

TEST_CASE("pair recurrence base and first level") {
    TildeErrPair base = tilde_err_base();
    CHECK(base.e0 == tg(2));
    CHECK(base.e1 == tg(1));
    TildeErrPair one = tilde_err_step(base);
    CHECK(one.e0 == tg(2) + tg(4) + tg(6));
    CHECK(one.e1 == tg(1) + tg(3) + tg(5));
    CHECK(one.e1 == shift(one.e0, -1));
}

TEST_CASE("pair recurrence second level canonical form") {
    TildeErrPair two = tilde_err_step(tilde_err_step(tilde_err_base()));
    TildeChVec want;
    const std::pair<std::int64_t, std::int64_t> rows[] = {{0, 3},  {2, 10},  {4, 17}, {6, 23},
                                                          {8, 25}, {10, 23}, {12, 17}, {14, 10},
                                                          {16, 4}, {18, 1}};
    for (auto [k, c] : rows) want.add(k, BigInt(c));
    CHECK(two.e0 == want);

    // The 1-component is the downshift of the full coefficient table, whose
    // below-zero entry distinguishes it from the canonical 0-component.
    TildeChVec full;
    const std::pair<std::int64_t, std::int64_t> table[] = {{-2, 1}, {0, 4},   {2, 10}, {4, 17},
                                                           {6, 23}, {8, 25},  {10, 23}, {12, 17},
                                                           {14, 10}, {16, 4}, {18, 1}};
    for (auto [k, c] : table) full.add(k, BigInt(c));
    CHECK(canonicalize(full) == two.e0);
    CHECK(two.e1 == canonicalize(shift(full, -1)));
    CHECK(two.e1.coeff(1) == BigInt(9));
}
