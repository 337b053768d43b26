#include "doctest.h"

#include "nrs2/err_recurrences.hpp"
#include "nrs2/layered_poly.hpp"
#include "nrs2/poly3.hpp"

using namespace nrs2;

TEST_CASE("roundtrip through the layered representation") {
    Poly3 p = mrr_base_poly().em1;  // 1 + u3(u1+u2), weight 0
    LayeredPoly lp = LayeredPoly::from_poly3(p);
    CHECK(lp.weight() == 0);
    CHECK(lp.deg3() == 1);
    CHECK(lp.fully_exact());
    CHECK(lp.to_poly3() == p);
    Rational at = lp.eval(Rational(2), Rational(3), Rational(1) / Rational(2));
    CHECK(at == p.eval(Rational(2), Rational(3), Rational(1) / Rational(2)));
}

TEST_CASE("mixed weights are rejected") {
    CHECK_THROWS(LayeredPoly::from_poly3(Poly3::u1() + Poly3::u3()));
}

TEST_CASE("arithmetic agrees with the direct representation") {
    Poly3 a = mrr_base_poly().e0;   // weight 2
    Poly3 b = mrr_base_poly().e1;   // weight 1
    LayeredPoly la = LayeredPoly::from_poly3(a);
    LayeredPoly lb = LayeredPoly::from_poly3(b);
    CHECK((la * lb).to_poly3() == a * b);
    CHECK((la + la).to_poly3() == a + a);
    CHECK((la - la).is_zero());
    CHECK(la.scaled(BigInt(3)).to_poly3() == a * Rational(3));
    CHECK(la.shifted_u3(2).to_poly3() == a.scale_by_monomial(0, 0, 2));
}

TEST_CASE("layered orbit matches the direct orbit where both exist") {
    auto direct = mrr_orbit_poly(2);
    LayeredTriple t = mrr_base_layered();
    for (int n = 0; n <= 2; ++n) {
        CHECK(t.e0 == LayeredPoly::from_poly3(direct[n].e0));
        CHECK(t.e1 == LayeredPoly::from_poly3(direct[n].e1));
        CHECK(t.em1 == LayeredPoly::from_poly3(direct[n].em1));
        if (n < 2) t = mrr_step_layered(t);
    }
}

TEST_CASE("windowed orbit keeps the top layers exact") {
    auto windowed = mrr_orbit_layered(2, 4, 4);
    auto leads = lead_orbit_poly(4);
    for (int n = 0; n <= 4; ++n) {
        const LayeredPoly& e0 = windowed[n].e0;
        std::int64_t d = e0.deg3() + e0.weight();
        std::vector<BigInt> dense(static_cast<std::size_t>(d) + 1);
        for (const auto& [m, c] : leads[n].e0.terms()) dense[m.e2] = num(c);
        CHECK(e0.top_layer() == dense);
        CHECK(e0.deg3() == 2 * (pow3(n) - pow2(n)));
    }
    // below the window nothing is claimed, and the object says so
    CHECK_FALSE(windowed[4].e0.fully_exact());
    CHECK(windowed[2].e0.fully_exact());
}

TEST_CASE("layer rows read the same in both directions") {
    auto orbit = mrr_orbit_layered(3, 3, 4);
    for (int n = 0; n <= 3; ++n) {
        CHECK(orbit[n].e0.layers_palindromic());
        CHECK(orbit[n].e1.layers_palindromic());
        CHECK(orbit[n].em1.layers_palindromic());
    }
}
