#include "doctest.h"

#include "nrs2/ch_rings.hpp"
#include "nrs2/rv_trees.hpp"

#include <algorithm>
#include <set>

using namespace nrs2;

TEST_CASE("leaf construction and statistics") {
    RvTree leaf = RvTree::leaf(2);
    CHECK(leaf.is_leaf());
    CHECK(leaf.val() == 2);
    CHECK(leaf.height() == 0);
    CHECK(leaf.rad() == 0);
    CHECK(leaf.sgn() == 1);
    CHECK(leaf.ind() == 0);
    CHECK(leaf.str() == "2");
    CHECK_THROWS(RvTree::leaf(3));  // odd labels are not representable
}

TEST_CASE("node construction validates the label window") {
    RvTree two = RvTree::leaf(2);
    RvTree ok = RvTree::node(4, two, two, two);
    CHECK(ok.val() == 4);
    CHECK(ok.height() == 1);
    CHECK(ok.delta() == 0);
    CHECK_THROWS(RvTree::node(8, two, two, two));   // |8-4| > tau(2)
    CHECK_THROWS(RvTree::node(3, two, two, two));   // odd label
    RvTree tall = RvTree::node(2, two, two, two);
    CHECK_THROWS(RvTree::node(4, tall, two, two));  // unequal child heights
}

TEST_CASE("enumeration counts by height") {
    CHECK(enumerate_trees(0).size() == 1);
    auto l1 = enumerate_trees(1);
    REQUIRE(l1.size() == 3);
    CHECK(l1[0].val() == 2);
    CHECK(l1[1].val() == 4);
    CHECK(l1[2].val() == 6);
    CHECK(enumerate_trees(2).size() == 135);
    CHECK_THROWS(enumerate_trees(3));  // too many to materialize
}

TEST_CASE("streaming matches enumeration where both work") {
    for (int n = 0; n <= 2; ++n) {
        auto all = enumerate_trees(n);
        std::size_t i = 0;
        bool ordered = true;
        stream_trees(n, [&](const RvTree& t) {
            if (i >= all.size() || !(t == all[i])) ordered = false;
            ++i;
            return true;
        });
        CHECK(ordered);
        CHECK(i == all.size());
    }
}

TEST_CASE("serialization round trip and rejection of malformed text") {
    for (const RvTree& t : enumerate_trees(2)) CHECK(RvTree::parse(t.str()) == t);
    RvTree nested = RvTree::parse("(4 (2 2 2 2) (6 2 2 2) (2 2 2 2))");
    CHECK(nested.height() == 2);
    CHECK(nested.child(2).val() == 6);
    for (const char* bad : {"(2", "3", "(2 2 2)", "(4 2 2 2", "2 junk", "()"})
        CHECK_THROWS(RvTree::parse(bad));
}

TEST_CASE("index is the label offset from the central value") {
    for (int n = 0; n <= 2; ++n)
        for (const RvTree& t : enumerate_trees(n)) CHECK(t.ind() == t.val() - pow2(n + 1));
}

TEST_CASE("mirror involution") {
    auto l1 = enumerate_trees(1);
    CHECK(inv(l1[0]) == l1[2]);
    CHECK(inv(l1[1]) == l1[1]);
    for (int n = 0; n <= 2; ++n)
        for (const RvTree& t : enumerate_trees(n)) {
            RvTree m = inv(t);
            CHECK(t.val() + m.val() == pow2(n + 2));
            CHECK(inv(m) == t);
            if (!t.is_leaf()) CHECK(m.child(2) == t.child(2));
        }
}

TEST_CASE("radius examples at height two") {
    // all-leaf spine keeps radius small; extreme labels push it up
    RvTree wide = RvTree::parse("(2 (2 2 2 2) (6 2 2 2) (2 2 2 2))");
    CHECK(wide.rad() >= 2);
    std::set<std::int64_t> radii;
    for (const RvTree& t : enumerate_trees(2)) radii.insert(t.rad());
    CHECK(radii.count(0) == 1);
    CHECK(*radii.rbegin() == 10);
}

TEST_CASE("signed sums against frozen tables") {
    TreeSums s0 = tree_sums(0);
    CHECK(s0.total == 1);
    CHECK(s0.signed_sum == tilde_gen(2));
    TreeSums s1 = tree_sums(1);
    CHECK(s1.total == 3);
    CHECK(s1.signed_sum == tilde_gen(2) + tilde_gen(4) + tilde_gen(6));
    TreeSums s2 = tree_sums(2);
    CHECK(s2.total == 135);
    CHECK(s2.plus_count == 135);
    TildeChVec want;
    const std::pair<std::int64_t, std::int64_t> rows[] = {{-2, 1}, {0, 4},   {2, 10},  {4, 17},
                                                          {6, 23}, {8, 25},  {10, 23}, {12, 17},
                                                          {14, 10}, {16, 4}, {18, 1}};
    for (auto [k, c] : rows) want.add(k, BigInt(c));
    CHECK(s2.signed_sum == want);
    CHECK(s2.plus_sum == want);  // no negative signs yet at this height
}

TEST_CASE("height-three sums via the factored census") {
    TreeSums f = tree_sums_level3_factored();
    CHECK(f.total == 22179825ULL);
    CHECK(f.plus_count == 22143375ULL);
    CHECK(f.signed_sum == f.plus_sum);
    std::size_t visited = 0;
    stream_trees(1, [&](const RvTree&) {
        ++visited;
        return false;  // early stop is honoured
    });
    CHECK(visited == 1);
}

TEST_CASE("label mass of height-two trees") {
    std::uint64_t mass = 0, kept = 0;
    for (const RvTree& t : enumerate_trees(2)) {
        mass += static_cast<std::uint64_t>(tau(t.val()) + 1);
        if (is_plus(t) && t.val() >= std::max<std::int64_t>(t.rad() - 8, 0))
            kept += static_cast<std::uint64_t>(tau(t.val()) + 1);
    }
    CHECK(mass == 1217);
    CHECK(kept == 1215);
}

TEST_CASE("partition into centered paths") {
    for (int n = 0; n <= 2; ++n) {
        auto paths = build_partition(n);
        PartitionCheck pc = check_partition(paths, n);
        CHECK(pc.ok);
        if (!pc.ok) MESSAGE(pc.counterexample);
    }
    PartitionCheck p2 = check_partition(build_partition(2), 2);
    CHECK(p2.paths == 25);
    CHECK(p2.vertices == 135);
    std::map<std::int64_t, std::uint64_t> want{{0, 2}, {2, 6}, {4, 7}, {6, 6}, {8, 3}, {10, 1}};
    CHECK(p2.radius_histogram == want);
}

TEST_CASE("index pairing on the below-threshold vertices") {
    std::uint64_t pairs[] = {0, 0, 1};
    for (int n = 0; n <= 2; ++n) {
        IotaCheck ic = check_iota(build_partition(n), n);
        CHECK(ic.ok);
        if (!ic.ok) MESSAGE(ic.counterexample);
        CHECK(ic.pair_count == pairs[n]);
    }
}

TEST_CASE("radius multiset recurrence agrees with built paths") {
    for (int n = 1; n <= 2; ++n) {
        PartitionCheck pc = check_partition(build_partition(n), n);
        auto rm = radius_multiset(n);
        std::map<std::int64_t, BigInt> from_paths;
        for (const auto& [r, m] : pc.radius_histogram) from_paths[r] = BigInt(m);
        CHECK(rm == from_paths);
    }
    BigInt total3 = 0;
    for (const auto& [r, m] : radius_multiset(3)) total3 += m * BigInt(r + 1);
    CHECK(total3 == BigInt(22143375));
}

TEST_CASE("coefficient tables along both routes") {
    TreeSums s2 = tree_sums(2);
    auto t2 = coeff_table_paths(2);
    TildeChVec as_vec;
    for (const auto& [k, c] : t2) as_vec.add(k, c);
    CHECK(as_vec == s2.plus_sum);

    TildeErrPair pair = tilde_err_base();
    for (int n = 0; n <= 3; ++n) {
        auto via_ring = coeff_table_ring(pair.e0, n);
        CHECK(via_ring == coeff_table_paths(n));
        pair = tilde_err_step(pair);
    }
}

TEST_CASE("table shape checks accept the real tables and reject a corrupted one") {
    for (int n = 0; n <= 3; ++n) {
        TableCheck tc = check_coeff_table(coeff_table_paths(n), n);
        CHECK(tc.ok());
        if (!tc.ok()) MESSAGE(tc.detail);
    }
    auto broken = coeff_table_paths(2);
    broken[2] += 1;  // breaks the mirror symmetry
    CHECK_FALSE(check_coeff_table(broken, 2).ok());
}
