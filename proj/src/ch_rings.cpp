#include "nrs2/ch_rings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nrs2 {

namespace {

template <typename Vec>
void add_into(std::map<std::int64_t, BigInt>& m, std::int64_t i, const BigInt& v) {
    if (v == 0) return;
    auto it = m.find(i);
    if (it == m.end()) {
        m.emplace(i, v);
    } else {
        it->second += v;
        if (it->second == 0) m.erase(it);
    }
}

std::string series_str(const std::map<std::int64_t, BigInt>& c, const char* sym) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : c) {
        BigInt mag = v < 0 ? BigInt(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        os << mag << "*" << sym << "[" << i << "]";
    }
    return os.str();
}

}  // namespace

BigInt ChVec::coeff(std::int64_t i) const {
    auto it = c.find(i);
    return it == c.end() ? BigInt(0) : it->second;
}

void ChVec::add(std::int64_t i, const BigInt& v) {
    if (i < 0) throw std::domain_error("ChVec index must be nonnegative");
    add_into<ChVec>(c, i, v);
}

ChVec operator+(ChVec a, const ChVec& b) {
    for (const auto& [i, v] : b.c) a.add(i, v);
    return a;
}

ChVec operator-(ChVec a, const ChVec& b) {
    for (const auto& [i, v] : b.c) a.add(i, -v);
    return a;
}

std::string ChVec::str() const { return series_str(c, "h"); }

BigInt TildeChVec::coeff(std::int64_t i) const {
    auto it = c.find(i);
    return it == c.end() ? BigInt(0) : it->second;
}

void TildeChVec::add(std::int64_t i, const BigInt& v) { add_into<TildeChVec>(c, i, v); }

TildeChVec operator+(TildeChVec a, const TildeChVec& b) {
    for (const auto& [i, v] : b.c) a.add(i, v);
    return a;
}

TildeChVec operator-(TildeChVec a, const TildeChVec& b) {
    for (const auto& [i, v] : b.c) a.add(i, -v);
    return a;
}

TildeChVec operator*(const BigInt& k, TildeChVec a) {
    if (k == 0) return TildeChVec{};
    for (auto& [i, v] : a.c) v *= k;
    return a;
}

std::string TildeChVec::str() const { return series_str(c, "h~"); }

ChVec ch_gen(std::int64_t i) {
    ChVec v;
    v.add(i, 1);
    return v;
}

TildeChVec tilde_gen(std::int64_t i) {
    TildeChVec v;
    v.add(i, 1);
    return v;
}

ChVec mul_ch(const ChVec& a, const ChVec& b) {
    ChVec out;
    for (const auto& [i, ca] : a.c)
        for (const auto& [j, cb] : b.c) {
            BigInt w = ca * cb;
            std::int64_t lo = i >= j ? i - j : j - i;
            std::int64_t m = std::min(i, j);
            for (std::int64_t k = 0; k <= m; ++k) out.add(lo + 2 * k, w);
        }
    return out;
}

TildeChVec mul_tilde(const TildeChVec& a, const TildeChVec& b) {
    if (a.c.empty() || b.c.empty()) return {};
    // Every basis product lands on a contiguous parity-2 run, so accumulate
    // range endpoints in a difference array and sweep once per parity.  This
    // keeps the work per term pair constant even when runs are very long.
    struct Run {
        std::int64_t lo, hi;  // inclusive, step 2
        BigInt w;
    };
    std::vector<Run> runs;
    runs.reserve(a.c.size() * b.c.size());
    std::int64_t lo_min = 0, hi_max = 0;
    bool any = false;
    for (const auto& [i0, ca] : a.c) {
        if (i0 == -1) continue;  // left factor h~[-1] annihilates
        std::int64_t i = i0;
        bool neg = false;
        if (i0 < -1) {
            i = tau(i0);
            neg = true;
        }
        for (const auto& [j, cb] : b.c) {
            BigInt w = ca * cb;
            if (neg) w = -w;
            std::int64_t lo = j - i, hi = j + i;
            if (!any || lo < lo_min) lo_min = lo;
            if (!any || hi > hi_max) hi_max = hi;
            any = true;
            runs.push_back({lo, hi, std::move(w)});
        }
    }
    if (!any) return {};
    std::vector<BigInt> diff(static_cast<std::size_t>(hi_max - lo_min) + 3);
    for (const auto& r : runs) {
        diff[static_cast<std::size_t>(r.lo - lo_min)] += r.w;
        diff[static_cast<std::size_t>(r.hi - lo_min) + 2] -= r.w;
    }
    TildeChVec out;
    for (int parity = 0; parity < 2; ++parity) {
        BigInt acc = 0;
        for (std::size_t p = static_cast<std::size_t>(parity); p < diff.size(); p += 2) {
            acc += diff[p];
            if (acc != 0) out.c.emplace(lo_min + static_cast<std::int64_t>(p), acc);
        }
    }
    return out;
}

TildeChVec shift(const TildeChVec& v, std::int64_t k) {
    TildeChVec out;
    for (const auto& [i, c] : v.c) out.c.emplace_hint(out.c.end(), i + k, c);
    return out;
}

ChVec L_map(const TildeChVec& v) {
    ChVec out;
    for (const auto& [i, c] : v.c) {
        if (i == -1) continue;
        out.add(tau(i), i >= 0 ? c : BigInt(-c));
    }
    return out;
}

TildeChVec canonicalize(const TildeChVec& v) {
    TildeChVec out;
    for (const auto& [i, c] : v.c) {
        if (i >= 0)
            out.add(i, c);
        else if (i <= -2)
            out.add(-i - 2, -c);
    }
    return out;
}

bool ker_membership(const TildeChVec& v) { return canonicalize(v).is_zero(); }

TildeChVec U_elem(std::int64_t a, std::int64_t b, std::int64_t c) {
    TildeChVec out;
    if (a == 0) return out;
    std::int64_t n = a > 0 ? a : -a;
    BigInt s = a > 0 ? 1 : -1;
    for (std::int64_t j = 0; j < n; ++j) out.add(c - b - n + 2 * j, s);
    return out;
}

Poly3 embed(const ChVec& v, std::int64_t t) {
    Poly3 out;
    for (const auto& [i, c] : v.c) {
        if (i > t || ((t - i) & 1))
            throw std::domain_error("embed: index " + std::to_string(i) +
                                    " not representable at degree " + std::to_string(t));
        auto p = static_cast<std::uint32_t>((t - i) / 2);
        Rational rc{c};
        for (std::int64_t k = 0; k <= i; ++k)
            out += Poly3(rc, Monomial3{p + static_cast<std::uint32_t>(k),
                                       p + static_cast<std::uint32_t>(i - k), 0});
    }
    return out;
}

TildeErrPair tilde_err_base() { return {0, tilde_gen(2), tilde_gen(1)}; }

TildeErrPair tilde_err_step(const TildeErrPair& cur, const TildeMul& mul) {
    const TildeChVec& e0 = cur.e0;
    const TildeChVec& e1 = cur.e1;
    TildeChVec e0sq = mul(e0, e0);
    TildeChVec e1sq = mul(e1, e1);
    TildeChVec next0 = mul(e0sq - e1sq, e0);
    TildeChVec next1 = mul((e0sq + e0sq) - mul(mul(tilde_gen(1), e1), e0), e1);
    return {cur.n + 1, canonicalize(next0), canonicalize(next1)};
}

std::vector<TildeErrPair> tilde_err_orbit(int n_max) {
    std::vector<TildeErrPair> orbit;
    orbit.push_back(tilde_err_base());
    for (int n = 0; n < n_max; ++n) orbit.push_back(tilde_err_step(orbit.back()));
    return orbit;
}

}  // namespace nrs2
