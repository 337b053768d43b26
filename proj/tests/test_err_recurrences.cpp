#include "doctest.h"

#include "nrs2/cubic.hpp"
#include "nrs2/err_recurrences.hpp"
#include "nrs2/poly3.hpp"

using namespace nrs2;

namespace {
Poly3 U1() { return Poly3::u1(); }
Poly3 U2() { return Poly3::u2(); }
Poly3 U3() { return Poly3::u3(); }
}  // namespace

TEST_CASE("raw base triple closed forms") {
    ErrTriple<Poly3> base = orr_base(poly_u());
    CHECK(base.e0 == (U1() * U1() + U1() * U2() + U2() * U2()) * U3());
    CHECK(base.e1 == (U1() + U2()) * U3() * elem_sym1());
    CHECK(base.em1 == U1() * U2() * elem_sym2());
    CHECK(base.em1.eval(Rational(1), Rational(1), Rational(1)) == Rational(3));
    Rational sum = base.e0.eval(Rational(1), Rational(1), Rational(1)) +
                   base.e1.eval(Rational(1), Rational(1), Rational(1));
    CHECK(sum == Rational(9));
}

TEST_CASE("scalar raw orbit at the all-ones point") {
    UValues<Rational> ones = rational_u(Rational(1), Rational(1), Rational(1));
    ErrTriple<Rational> level1 = orr_step(orr_base(ones), ones);
    CHECK(level1.e0 == Rational(108));
    CHECK(level1.e1 == Rational(243));
    CHECK(level1.em1 == Rational(189));
}

TEST_CASE("reduced base triple") {
    ErrTriple<Poly3> base = mrr_base_poly();
    CHECK(base.e0 == U1() * U1() + U1() * U2() + U2() * U2());
    CHECK(base.e1 == U1() + U2());
    CHECK(base.em1 == Poly3::one() + U3() * (U1() + U2()));
}

TEST_CASE("u3 degrees of the reduced orbit") {
    auto orbit = mrr_orbit_poly(3);
    const std::int64_t want01[] = {0, 2, 10, 38};   // 2(3^n - 2^n)
    const std::int64_t wantm[] = {1, 5, 17, 53};    // 2*3^n - 1
    for (int n = 1; n <= 3; ++n) {
        CHECK(orbit[n].e0.deg_u3() == want01[n]);
        CHECK(orbit[n].e1.deg_u3() == want01[n]);
        CHECK(orbit[n].em1.deg_u3() == wantm[n]);
    }
    CHECK(orbit[0].em1.deg_u3() == wantm[0]);
}

TEST_CASE("reduction of the raw orbit reaches the reduced orbit") {
    auto raw = orr_orbit_poly(1);
    auto red = mrr_orbit_poly(1);
    for (int n = 0; n <= 1; ++n) {
        ReductionTrace tr = reduce_raw_level(raw[n]);
        CHECK(tr.reduced.e0 == red[n].e0);
        CHECK(tr.reduced.e1 == red[n].e1);
        CHECK(tr.reduced.em1 == red[n].em1);
    }
    ReductionTrace tr0 = reduce_raw_level(raw[0]);
    CHECK(tr0.s_exp == std::array<std::int64_t, 3>{0, 1, 0});
    CHECK(tr0.u12_exp == std::array<std::int64_t, 3>{1, 1, 2});
    CHECK(tr0.u3_exp == std::array<std::int64_t, 3>{1, 1, 0});
}

TEST_CASE("top layer keeps only the maximal u3 power") {
    auto red = mrr_orbit_poly(2);
    auto leads = lead_orbit_poly(2);
    for (int n = 0; n <= 2; ++n) {
        ErrTriple<Poly3> lt = top_layer(red[n]);
        CHECK(lt.e0 == leads[n].e0);
        CHECK(lt.e1 == leads[n].e1);
        CHECK(lt.em1 == leads[n].em1);
    }
}

TEST_CASE("top-layer orbit collapses to two components") {
    auto leads = lead_orbit_poly(3);
    for (int n = 0; n <= 3; ++n) CHECK(leads[n].em1 == leads[n].e1);
    LeadPair<Poly3> pair = lead_pair_base(poly_u2());
    for (int n = 0; n <= 3; ++n) {
        CHECK(pair.e0 == leads[n].e0);
        CHECK(pair.e1 == leads[n].e1);
        if (n < 3) pair = lead_pair_step(pair, poly_u2());
    }
}

TEST_CASE("coefficient rows of the top-layer orbit") {
    auto rows = lead_coeff_rows(1);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == std::vector<BigInt>{1, 1, 1});
    CHECK(rows[1] == std::vector<BigInt>{1, 2, 3, 3, 3, 2, 1});
    auto csv = lead_coeff_csv(1);
    CHECK(csv.find("1,6,\"1 2 3 3 3 2 1\"") != std::string::npos);
}

TEST_CASE("error fractions match the iteration at a seed triple") {
    std::array<Rational, 3> u{Rational(1), Rational(2), Rational(3)};
    Cubic cubic(u);
    UValues<Rational> uv = rational_u(u[0], u[1], u[2]);
    std::vector<ErrTriple<Rational>> err{orr_base(uv)};
    err.push_back(orr_step(err.back(), uv));
    err.push_back(orr_step(err.back(), uv));
    auto states = cubic.iterate(2);
    Rational a0 = (u[0] + u[1]) / (u[0] * u[1]);
    Rational a1 = (u[0] + u[1] + u[2]) / (u[0] * u[1]);
    for (std::size_t n = 0; n <= 2; ++n) {
        REQUIRE(err[n].em1 != Rational(0));
        CHECK(a0 - states[n].x0 == err[n].e0 / err[n].em1);
        CHECK(a1 - states[n].x1 == err[n].e1 / err[n].em1);
    }
}
