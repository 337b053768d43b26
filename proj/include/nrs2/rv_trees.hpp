#pragma once

#include "nrs2/centered_path.hpp"
#include "nrs2/ch_rings.hpp"
#include "nrs2/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace nrs2 {

// Plane ternary tree with even labels.  The middle child bounds how far the
// root label may drift from the sum of the outer child values.  Radius and
// sign are fixed by the structure, so they are computed once at construction.
class RvTree {
public:
    static RvTree leaf(std::int64_t label);
    static RvTree node(std::int64_t label, RvTree t1, RvTree t2, RvTree t3);

    std::int64_t val() const { return label_; }
    int height() const { return height_; }
    bool is_leaf() const { return kids_.empty(); }
    const RvTree& child(int i) const;  // 1-based, i in {1,2,3}

    std::int64_t ind() const { return label_ - (std::int64_t{2} << height_); }
    std::int64_t rad() const { return rad_; }
    int sgn() const { return sgn_; }
    std::int64_t delta() const;  // label - val(t1) - val(t3), nodes only

    bool leaves_all_two() const;

    // "(l t1 t2 t3)" nested, a bare label for a leaf.
    std::string str() const;
    static RvTree parse(const std::string& text);

    friend bool operator==(const RvTree& a, const RvTree& b);

private:
    RvTree(std::int64_t label, int height, std::int64_t rad, int sgn, std::vector<RvTree> kids);

    std::int64_t label_;
    int height_;
    std::int64_t rad_;
    int sgn_;
    std::vector<RvTree> kids_;
};

// Mirror involution: outer children are mirrored and the label offset is
// negated; the middle child is kept as-is.
RvTree inv(const RvTree& t);

// Membership in the positively-contributing subset: at every node the middle
// child value must reach max(rad - 2^h, 0), h the node's height.
bool is_plus(const RvTree& t);

// All leaf-2 trees of the given height, ordered by (label, t1, t2, t3).
// Materialized; heights above 2 are refused (use stream_trees).
std::vector<RvTree> enumerate_trees(int n);

// Same order, visitor-driven, constant memory; handles heights up to 3.
// Return false from the visitor to stop early.
void stream_trees(int n, const std::function<bool(const RvTree&)>& visit);

struct TreeSums {
    std::uint64_t total = 0;       // all leaf-2 trees of this height
    std::uint64_t plus_count = 0;  // those passing is_plus
    TildeChVec signed_sum;         // sum of sgn(T) h~[val(T)]
    TildeChVec plus_sum;           // sum of h~[val(T)] over the plus subset
};

TreeSums tree_sums(int n);  // exhaustive, n <= 2

// Height-3 sums without building trees: outer-pair value histograms are
// convolved against middle-child label windows.
TreeSums tree_sums_level3_factored();

// Height-3 sums the expensive way: every tree is built through the checked
// constructor.  `progress` (if set) is called every `stride` trees.
TreeSums tree_sums_level3_streamed(const std::function<void(std::uint64_t)>& progress = {},
                                   std::uint64_t stride = 5'000'000);

// ---- partition of the plus subset into centered paths ----

using TreePath = CenteredPath<RvTree>;

// Level-n path family: product paths over the previous level crossed with a
// label window per admissible middle tree.  n <= 2.
std::vector<TreePath> build_partition(int n);

struct PartitionCheck {
    bool ok = true;
    std::uint64_t paths = 0;
    std::uint64_t vertices = 0;
    std::string counterexample;  // first violation: path id, index, tree

    std::map<std::int64_t, std::uint64_t> radius_histogram;
};

// Even radii, ind(T) = position, rad(T) = path radius, central value 2^{n+1},
// vertices pairwise distinct and jointly equal to the plus subset.
PartitionCheck check_partition(const std::vector<TreePath>& paths, int n);

struct IotaCheck {
    bool ok = true;
    std::uint64_t pair_count = 0;
    std::string counterexample;
    ChVec kept_top;      // h[val] over vertices with val >= max(rad - 2^{n+1}, 0)
    ChVec kept_subtree;  // same with threshold max(rad - 2^n, 0)
};

// Pairs up the below-threshold vertices of each path via the index involution
// and checks the fold/sign behaviour that makes their images cancel.
IotaCheck check_iota(const std::vector<TreePath>& paths, int n);

// ---- coefficient tables at heights beyond enumeration ----

// Multiset of path radii per level, by the same product construction but
// tracking only (radius, multiplicity).
std::map<std::int64_t, BigInt> radius_multiset(int n);

// Value table of the level-n plus subset, from the radius multiset.
std::map<std::int64_t, BigInt> coeff_table_paths(int n);

// The same table recovered from a canonicalized series: the canonical
// coefficients are unfolded against the mirror symmetry about 2^{n+1}.
std::map<std::int64_t, BigInt> coeff_table_ring(const TildeChVec& canonical_e0, int n);

struct TableCheck {
    bool positive = true;
    bool symmetric = true;
    bool unimodal = true;
    bool support_ok = true;
    bool max_ok = true;
    bool contiguous = true;
    std::string detail;

    bool ok() const { return positive && symmetric && unimodal && support_ok && max_ok && contiguous; }
};

// Positivity, mirror symmetry about 2^{n+1}, growth toward the centre,
// support inside 2^{n+1} +- 2(3^n - 2^n), top index exactly 2*3^n.
TableCheck check_coeff_table(const std::map<std::int64_t, BigInt>& table, int n);

}  // namespace nrs2
