#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nrs2 {

// Piecewise radius function used both abstractly (path decomposition) and as
// the recursion kernel for tree radii.
inline std::int64_t rho(std::int64_t r1, std::int64_t r2, std::int64_t x, std::int64_t y) {
    return y >= -x + r2 - r1 ? r1 + y : r2 - x;
}

// Path on radius+1 vertices indexed -r, -r+2, ..., r.  Payloads are opaque;
// the same container carries plain coordinates in the pairing grids and whole
// trees in the partition builder.
template <typename P>
class CenteredPath {
public:
    CenteredPath(std::int64_t radius, std::vector<P> payloads)
        : radius_(radius), payloads_(std::move(payloads)) {
        if (radius_ < 0) throw std::invalid_argument("centered path: negative radius");
        if (payloads_.size() != static_cast<std::size_t>(radius_) + 1)
            throw std::invalid_argument("centered path: need radius+1 payloads, got " +
                                        std::to_string(payloads_.size()));
    }

    std::int64_t radius() const { return radius_; }

    bool has_index(std::int64_t i) const {
        return i >= -radius_ && i <= radius_ && (i - radius_) % 2 == 0;
    }

    const P& at(std::int64_t i) const {
        if (!has_index(i))
            throw std::out_of_range("centered path: bad index " + std::to_string(i) +
                                    " for radius " + std::to_string(radius_));
        return payloads_[static_cast<std::size_t>((i + radius_) / 2)];
    }

    // Indices in ascending order, paired with payload order.
    std::vector<std::int64_t> indices() const {
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(radius_) + 1);
        for (std::int64_t i = -radius_; i <= radius_; i += 2) out.push_back(i);
        return out;
    }

    const std::vector<P>& payloads() const { return payloads_; }

private:
    std::int64_t radius_;
    std::vector<P> payloads_;
};

// Which product path a vertex pair lands in, and where.
struct PairLocation {
    std::int64_t k = 0;
    std::int64_t j = 0;
};

inline PairLocation locate(std::int64_t r1, std::int64_t r2, std::int64_t x, std::int64_t y) {
    if (x < -r1 || x > r1 || (x - r1) % 2 != 0)
        throw std::out_of_range("locate: x outside first path");
    if (y < -r2 || y > r2 || (y - r2) % 2 != 0)
        throw std::out_of_range("locate: y outside second path");
    std::int64_t k = (x + r1) / 2 < (r2 - y) / 2 ? (x + r1) / 2 : (r2 - y) / 2;
    return {k, x + y};
}

// k-th product path: radius r1+r2-2k, corner at (-r1+2k, r2-2k).  Walking by
// ascending index j = x+y, the leg with x fixed at -r1+2k comes first, then
// the leg with y fixed at r2-2k.
template <typename A, typename B>
CenteredPath<std::pair<A, B>> product_path(const CenteredPath<A>& p1, const CenteredPath<B>& p2,
                                           std::int64_t k) {
    std::int64_t r1 = p1.radius(), r2 = p2.radius();
    std::int64_t rmin = r1 < r2 ? r1 : r2;
    if (k < 0 || k > rmin)
        throw std::out_of_range("product path: k = " + std::to_string(k) +
                                " outside [0, min(r1,r2)]");
    std::int64_t r = r1 + r2 - 2 * k;
    std::vector<std::pair<A, B>> payloads;
    payloads.reserve(static_cast<std::size_t>(r) + 1);
    for (std::int64_t j = -r; j <= r; j += 2) {
        std::int64_t x, y;
        if (j <= r2 - r1) {
            x = -r1 + 2 * k;
            y = j - x;
        } else {
            y = r2 - 2 * k;
            x = j - y;
        }
        payloads.emplace_back(p1.at(x), p2.at(y));
    }
    return CenteredPath<std::pair<A, B>>(r, std::move(payloads));
}

}  // namespace nrs2
