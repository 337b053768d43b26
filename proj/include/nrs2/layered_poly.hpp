#pragma once

#include "nrs2/poly3.hpp"
#include "nrs2/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace nrs2 {

// Dense form for polynomials whose u3-layers are (u1,u2)-homogeneous with a
// fixed weight: every term satisfies deg_u1 + deg_u2 - deg_u3 = w.  Layer k
// collects the coefficient of u3^k; its entries are the coefficients of
// u1^(d-j) u2^j for j = 0..d with d = k + w.
//
// A value may be windowed: layers below `exact_from` are unknown (forgotten
// to save work), layers in [exact_from, base) are implicitly zero, and
// storage holds [base, deg3].  Stored layers are always exact; arithmetic
// propagates the unknown boundary conservatively, which makes top-of-orbit
// computations cheap at levels where the full expansion is out of reach.
class LayeredPoly {
public:
    using Layer = std::vector<BigInt>;

    LayeredPoly() = default;  // zero, weight 0, fully exact

    static LayeredPoly constant(BigInt c, std::int64_t weight01 = 0);  // c * u1^weight01
    static LayeredPoly from_poly3(const Poly3& p);  // throws if not weight-homogeneous

    std::int64_t weight() const { return w_; }
    std::int64_t base() const { return k0_; }
    std::int64_t exact_from() const { return exact_from_; }
    bool fully_exact() const { return exact_from_ == 0; }
    bool is_zero() const { return layers_.empty(); }
    std::int64_t deg3() const;  // u3-degree; throws on zero
    const Layer& top_layer() const;
    const Layer& layer(std::int64_t k) const;  // zero-sized if absent in range
    std::size_t coeff_count() const;

    Poly3 to_poly3() const;  // requires fully_exact
    Rational eval(const Rational& v1, const Rational& v2, const Rational& v3) const;
    bool layers_palindromic() const;

    LayeredPoly& negate();
    friend LayeredPoly operator+(const LayeredPoly& a, const LayeredPoly& b);
    friend LayeredPoly operator-(const LayeredPoly& a, const LayeredPoly& b);
    friend LayeredPoly operator*(const LayeredPoly& a, const LayeredPoly& b);
    // Equality of the represented (known) content; the exactness boundary is
    // bookkeeping and deliberately not compared.
    friend bool operator==(const LayeredPoly& a, const LayeredPoly& b) {
        return a.w_ == b.w_ && a.k0_ == b.k0_ && a.layers_ == b.layers_;
    }

    LayeredPoly scaled(const BigInt& c) const;
    LayeredPoly shifted_u3(std::int64_t t) const;  // * u3^t
    // Multiply by a (u1,u2)-homogeneous polynomial given by its coefficient
    // vector (same layout as a layer).
    LayeredPoly mul12(const Layer& f) const;

    // Forget layers below k; raises the stored base.  Used to keep windowed
    // orbits narrow.
    LayeredPoly truncated_below(std::int64_t k) const;

private:
    void trim();

    std::int64_t w_ = 0;
    std::int64_t k0_ = 0;          // u3-index of layers_.front()
    std::int64_t exact_from_ = 0;  // layers below this were forgotten
    std::vector<Layer> layers_;    // layers_[i] is u3-layer k0_ + i
};

struct LayeredTriple {
    int n = 0;
    LayeredPoly e0, e1, em1;
};

LayeredTriple mrr_base_layered();

// One level of the reduced orbit in layered form.  With `window` set, each
// output component keeps only its top `window` u3-layers; those layers are
// still exact provided the inputs covered enough depth (checked, throws
// std::runtime_error("window exhausted") otherwise).
LayeredTriple mrr_step_layered(const LayeredTriple& t,
                               std::optional<std::int64_t> window = std::nullopt);

std::vector<LayeredTriple> mrr_orbit_layered(int n_full, int n_max,
                                             std::int64_t window);

}  // namespace nrs2
