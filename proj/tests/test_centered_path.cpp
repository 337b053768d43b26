#include "doctest.h"

#include "nrs2/centered_path.hpp"

#include <string>

using namespace nrs2;

namespace {
CenteredPath<std::int64_t> indexed(std::int64_t r) {
    std::vector<std::int64_t> own;
    for (std::int64_t i = -r; i <= r; i += 2) own.push_back(i);
    return CenteredPath<std::int64_t>(r, std::move(own));
}
}  // namespace

TEST_CASE("combined radius function") {
    CHECK(rho(2, 4, -2, 4) == 6);
    CHECK(rho(2, 4, -2, 0) == 6);
    for (std::int64_t r = 0; r <= 6; ++r) CHECK(rho(r, r, -r, r) == 2 * r);
    CHECK(rho(0, 0, 0, 0) == 0);
}

TEST_CASE("path payload access respects index parity and range") {
    auto p = indexed(3);
    CHECK(p.radius() == 3);
    CHECK(p.at(-3) == -3);
    CHECK(p.at(1) == 1);
    CHECK(p.has_index(3));
    CHECK_FALSE(p.has_index(2));   // wrong parity
    CHECK_FALSE(p.has_index(5));   // out of range
    CHECK_THROWS(p.at(0));
    CHECK_THROWS(p.at(-5));
}

TEST_CASE("construction validates payload count") {
    CHECK_THROWS(CenteredPath<int>(2, {1, 2}));
    CHECK_THROWS(CenteredPath<int>(-1, {}));
}

TEST_CASE("product path walks vertical leg then horizontal leg") {
    auto p1 = indexed(1), p2 = indexed(3);
    auto prod = product_path(p1, p2, 1);  // radius 1 + 3 - 2 = 2
    REQUIRE(prod.radius() == 2);
    // vertical leg at x = -r1 + 2k = 1 while j <= r2 - r1
    CHECK(prod.at(-2) == std::pair<std::int64_t, std::int64_t>{1, -3});
    CHECK(prod.at(0) == std::pair<std::int64_t, std::int64_t>{1, -1});
    CHECK(prod.at(2) == std::pair<std::int64_t, std::int64_t>{1, 1});
    CHECK_THROWS(product_path(p1, p2, 2));  // k exceeds min(r1, r2)
}

TEST_CASE("locate inverts the product construction exhaustively") {
    for (std::int64_t r1 = 0; r1 <= 5; ++r1)
        for (std::int64_t r2 = 0; r2 <= 5; ++r2)
            for (std::int64_t k = 0; k <= std::min(r1, r2); ++k) {
                auto prod = product_path(indexed(r1), indexed(r2), k);
                for (std::int64_t j = -prod.radius(); j <= prod.radius(); j += 2) {
                    auto [x, y] = prod.at(j);
                    PairLocation loc = locate(r1, r2, x, y);
                    CHECK(loc.k == k);
                    CHECK(loc.j == j);
                    CHECK(loc.j == x + y);
                }
            }
}

TEST_CASE("corner point lands on the first path") {
    PairLocation loc = locate(4, 6, -4, 6);
    CHECK(loc.k == 0);
    CHECK(loc.j == 2);
}

TEST_CASE("locate validates its input point") {
    CHECK_THROWS(locate(2, 2, 3, 0));   // |x| > r1
    CHECK_THROWS(locate(2, 2, 1, 0));   // x parity off
}
