#include "doctest.h"

#include "nrs2/poly3.hpp"

using namespace nrs2;

namespace {
Poly3 U1() { return Poly3::u1(); }
Poly3 U2() { return Poly3::u2(); }
Poly3 U3() { return Poly3::u3(); }
}  // namespace

TEST_CASE("zero and one behave as ring identities") {
    Poly3 p = U1() * U2() + U3();
    CHECK(p + Poly3::zero() == p);
    CHECK(p * Poly3::one() == p);
    CHECK(p - p == Poly3::zero());
    CHECK(Poly3::zero().is_zero());
    CHECK_FALSE(Poly3::one().is_zero());
}

TEST_CASE("canonical text forms") {
    Poly3 h2 = U1() * U1() + U1() * U2() + U2() * U2();
    CHECK(h2.str() == "u1^2 + u1*u2 + u2^2");
    CHECK(Poly3::zero().str() == "0");
    CHECK((U1() - U2()).str() == "u1 - u2");
    Poly3 half(Rational(1) / Rational(2), Monomial3{0, 0, 1});
    CHECK(half.str() == "1/2*u3");
    CHECK((Poly3::one() + U3()).str() == "u3 + 1");
}

TEST_CASE("term order iterates graded, ties broken lexicographically") {
    Poly3 p = U3() * U3() + U1() * U2() + U1() + Poly3(Rational(5));
    std::vector<Monomial3> seen;
    for (const auto& [m, c] : p.terms()) seen.push_back(m);
    REQUIRE(seen.size() == 4);
    CHECK(seen[0].total_degree() == 0);
    CHECK(seen[1].total_degree() == 1);
    // degree-2 tie: u1*u2 before u3^2 when read back-to-front
    CHECK(seen[2].e3 == 2);
    CHECK(seen[3].e1 == 1);
    CHECK(seen[3].e2 == 1);
}

TEST_CASE("evaluation is exact") {
    Poly3 p = U1() * U1() * U2() - U3() * Poly3(Rational(7) / Rational(3));
    Rational v = p.eval(Rational(2), Rational(-1), Rational(1) / Rational(2));
    CHECK(v == Rational(-4) - Rational(7) / Rational(6));
}

TEST_CASE("elementary symmetric building blocks") {
    CHECK(elem_sym1() == U1() + U2() + U3());
    CHECK(elem_sym2() == U1() * U2() + U1() * U3() + U2() * U3());
    CHECK(elem_sym3() == U1() * U2() * U3());
    CHECK(elem_sym1().is_homogeneous());
    CHECK(elem_sym2().total_degree() == 2);
}

TEST_CASE("u3 degree and leading part") {
    Poly3 p = U1() * U3() * U3() + U2() * U3() * U3() + U1() * U3() + Poly3::one();
    CHECK(p.deg_u3() == 2);
    CHECK(p.lead_u3() == U1() + U2());
    CHECK_FALSE(p.lead_u3().depends_on_u3());
    CHECK((U1() * U1()).deg_u3() == 0);
    CHECK_THROWS_AS(Poly3::zero().deg_u3(), std::domain_error);
}

TEST_CASE("u3 substitution scales by u1*u2") {
    Poly3 p = U3() * U3() + U1() * U3();
    Poly3 q = p.substitute_u3_u1u2u3();
    Poly3 want = U1() * U1() * U2() * U2() * U3() * U3() + U1() * U1() * U2() * U3();
    CHECK(q == want);
}

TEST_CASE("monomial scaling and exact division invert each other") {
    Poly3 p = U1() + U2();
    Poly3 scaled = p.scale_by_monomial(2, 1, 3);
    auto back = scaled.divide_exact(U1() * U1() * U2() * U3() * U3() * U3());
    REQUIRE(back.has_value());
    CHECK(*back == p);
    CHECK_FALSE(U1().divide_exact(U2()).has_value());
    CHECK_FALSE((U1() + Poly3::one()).divide_exact(U1()).has_value());
}

TEST_CASE("variable swap is an involution and fixes symmetric input") {
    Poly3 sym = U1() * U1() + U1() * U2() + U2() * U2();
    CHECK(sym.swap_u1_u2() == sym);
    Poly3 asym = U1() * U1() * U2();
    CHECK(asym.swap_u1_u2() == U1() * U2() * U2());
    CHECK(asym.swap_u1_u2().swap_u1_u2() == asym);
}

TEST_CASE("homogeneity and total degree") {
    CHECK((U1() * U2() * U3()).is_homogeneous());
    CHECK_FALSE((U1() + Poly3::one()).is_homogeneous());
    CHECK((U1() * U1() * U3()).total_degree() == 3);
    CHECK_THROWS_AS(Poly3::zero().total_degree(), std::domain_error);
}
