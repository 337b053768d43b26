#include "doctest.h"

#include "nrs2/cubic.hpp"

using namespace nrs2;

namespace {
Rational q(long n) { return Rational(n); }
Rational q(long n, long d) { return Rational(n) / Rational(d); }
}  // namespace

TEST_CASE("coefficients from reciprocal roots") {
    Cubic c({q(1), q(2), q(3)});
    CHECK(c.a(0) == q(1));
    CHECK(c.a(1) == q(-6));
    CHECK(c.a(2) == q(11));
    CHECK(c.a(3) == q(-6));
    CHECK(c.start().x0 == q(6, 11));
    CHECK(c.start().x1 == q(6, 11));
    CHECK(c.fixed_point().x0 == q(3, 2));
    CHECK(c.fixed_point().x1 == q(3));
}

TEST_CASE("constructor rejects degenerate parameters") {
    CHECK_THROWS_AS(Cubic({q(0), q(1), q(2)}), std::domain_error);
    // u1 + u2 + u3 = 0 makes the linear coefficient vanish
    CHECK_THROWS_AS(Cubic({q(1), q(-1), q(0)}), std::domain_error);
    CHECK_THROWS_AS(Cubic({q(1), q(1), q(-2)}), std::domain_error);
}

TEST_CASE("auxiliary map vanishes at the fixed point") {
    Cubic c({q(1), q(2), q(3)});
    auto [f0, f1] = c.aux(c.fixed_point());
    CHECK(f0 == q(0));
    CHECK(f1 == q(0));
}

TEST_CASE("auxiliary map at the origin for equal roots") {
    Cubic ones({q(1), q(1), q(1)});
    auto [f0, f1] = ones.aux({q(0), q(0)});
    CHECK(f0 == q(-1));
    CHECK(f1 == q(-1));
}

TEST_CASE("jacobian at the origin is unipotent") {
    Cubic c({q(1), q(2), q(3)});
    auto J = c.jacobian({q(0), q(0)});
    CHECK(J[0] == q(1));
    CHECK(J[1] == c.a(0) * c.a(3) / (c.a(1) * c.a(2)));
    CHECK(J[2] == q(0));
    CHECK(J[3] == q(1));
    CHECK(c.jacobian_det({q(0), q(0)}) == q(1));
}

TEST_CASE("singular state is detected and reported") {
    Cubic c({q(1), q(2), q(3)});
    IterState bad{q(0), q(-121, 6)};
    CHECK(c.jacobian_det(bad) == q(0));
    bool thrown = false;
    try {
        c.step(bad, 4);
    } catch (const SingularJacobian& e) {
        thrown = true;
        CHECK(e.level() == 4);
        CHECK(e.state() == bad);
    }
    CHECK(thrown);
}

TEST_CASE("iterate returns the requested prefix deterministically") {
    Cubic c({q(1), q(2), q(3)});
    auto orbit = c.iterate(3);
    REQUIRE(orbit.size() == 4);
    CHECK(orbit[0] == c.start());
    CHECK(orbit[1] == c.step(orbit[0], 0));
    auto again = c.iterate(3);
    for (std::size_t i = 0; i < orbit.size(); ++i) CHECK(orbit[i] == again[i]);
}

TEST_CASE("orbit converges toward the fixed point in exact arithmetic") {
    Cubic c({q(1), q(2), q(3)});
    auto orbit = c.iterate(3);
    IterState alpha = c.fixed_point();
    auto absq = [](const Rational& r) { return r < 0 ? -r : r; };
    Rational before = absq(alpha.x0 - orbit[1].x0);
    Rational after = absq(alpha.x0 - orbit[3].x0);
    CHECK(after < before);
}
