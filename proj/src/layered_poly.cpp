#include "nrs2/layered_poly.hpp"

#include <gmp.h>

#include <algorithm>
#include <stdexcept>

namespace nrs2 {

namespace {

bool layer_zero(const LayeredPoly::Layer& l) {
    for (const auto& c : l)
        if (c != 0) return false;
    return true;
}

// out[i+j] += x[i] * y[j], straight into the mpz limbs.
void conv_acc(LayeredPoly::Layer& out, const LayeredPoly::Layer& x,
              const LayeredPoly::Layer& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        mpz_srcptr xi = x[i].backend().data();
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            mpz_addmul(out[i + j].backend().data(), xi, y[j].backend().data());
        }
    }
}

}  // namespace

LayeredPoly LayeredPoly::constant(BigInt c, std::int64_t weight01) {
    LayeredPoly p;
    p.w_ = weight01;
    if (c != 0) {
        Layer l(static_cast<std::size_t>(weight01) + 1);
        l[0] = std::move(c);  // u1^weight01
        p.layers_.push_back(std::move(l));
    }
    return p;
}

LayeredPoly LayeredPoly::from_poly3(const Poly3& p) {
    LayeredPoly out;
    if (p.is_zero()) return out;
    bool first = true;
    std::int64_t max_k = 0;
    for (const auto& [m, c] : p.terms()) {
        std::int64_t w = static_cast<std::int64_t>(m.e1) + m.e2 - m.e3;
        if (first) {
            out.w_ = w;
            first = false;
        } else if (w != out.w_) {
            throw std::domain_error("from_poly3: mixed weights");
        }
        max_k = std::max<std::int64_t>(max_k, m.e3);
    }
    out.layers_.resize(static_cast<std::size_t>(max_k) + 1);
    for (const auto& [m, c] : p.terms()) {
        if (!is_integer(c)) throw std::domain_error("from_poly3: non-integer coefficient");
        auto& l = out.layers_[m.e3];
        if (l.empty()) l.resize(static_cast<std::size_t>(m.e3 + out.w_) + 1);
        l[m.e2] = num(c);
    }
    out.trim();
    return out;
}

std::int64_t LayeredPoly::deg3() const {
    if (layers_.empty()) throw std::domain_error("deg3 of zero");
    return k0_ + static_cast<std::int64_t>(layers_.size()) - 1;
}

const LayeredPoly::Layer& LayeredPoly::top_layer() const {
    if (layers_.empty()) throw std::domain_error("top_layer of zero");
    return layers_.back();
}

const LayeredPoly::Layer& LayeredPoly::layer(std::int64_t k) const {
    static const Layer kEmpty;
    if (k < k0_ || k >= k0_ + static_cast<std::int64_t>(layers_.size())) return kEmpty;
    return layers_[static_cast<std::size_t>(k - k0_)];
}

std::size_t LayeredPoly::coeff_count() const {
    std::size_t n = 0;
    for (const auto& l : layers_) n += l.size();
    return n;
}

Poly3 LayeredPoly::to_poly3() const {
    if (!fully_exact()) throw std::domain_error("to_poly3 on a windowed value");
    Poly3 out;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        std::int64_t k = k0_ + static_cast<std::int64_t>(i);
        std::int64_t d = k + w_;
        for (std::size_t j = 0; j < layers_[i].size(); ++j) {
            if (layers_[i][j] == 0) continue;
            out += Poly3(Rational(layers_[i][j]),
                         Monomial3{static_cast<std::uint32_t>(d - static_cast<std::int64_t>(j)),
                                   static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)});
        }
    }
    return out;
}

Rational LayeredPoly::eval(const Rational& v1, const Rational& v2, const Rational& v3) const {
    if (!fully_exact()) throw std::domain_error("eval on a windowed value");
    if (layers_.empty()) return 0;
    // Power tables sized for the largest layer.
    std::size_t dmax = 0;
    for (const auto& l : layers_) dmax = std::max(dmax, l.size());
    std::vector<Rational> p1(dmax), p2(dmax);
    if (dmax) {
        p1[0] = 1;
        p2[0] = 1;
        for (std::size_t j = 1; j < dmax; ++j) {
            p1[j] = p1[j - 1] * v1;
            p2[j] = p2[j - 1] * v2;
        }
    }
    Rational acc = 0;
    Rational v3k = 1;
    for (std::int64_t t = 0; t < k0_; ++t) v3k *= v3;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        const auto& l = layers_[i];
        if (!l.empty()) {
            Rational lv = 0;
            std::size_t d = l.size() - 1;
            for (std::size_t j = 0; j < l.size(); ++j) {
                if (l[j] == 0) continue;
                lv += Rational(l[j]) * p1[d - j] * p2[j];
            }
            acc += lv * v3k;
        }
        v3k *= v3;
    }
    return acc;
}

bool LayeredPoly::layers_palindromic() const {
    for (const auto& l : layers_)
        for (std::size_t j = 0, r = l.size(); j < r / 2; ++j)
            if (l[j] != l[r - 1 - j]) return false;
    return true;
}

LayeredPoly& LayeredPoly::negate() {
    for (auto& l : layers_)
        for (auto& c : l) c = -c;
    return *this;
}

LayeredPoly operator+(const LayeredPoly& a, const LayeredPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.w_ != b.w_) throw std::domain_error("layered add: weight mismatch");
    LayeredPoly out;
    out.w_ = a.w_;
    out.exact_from_ = std::max(a.exact_from_, b.exact_from_);
    out.k0_ = std::max(out.exact_from_, std::min(a.k0_, b.k0_));
    std::int64_t top = std::max(a.deg3(), b.deg3());
    out.layers_.resize(static_cast<std::size_t>(top - out.k0_) + 1);
    for (std::int64_t k = out.k0_; k <= top; ++k) {
        const auto& la = a.layer(k);
        const auto& lb = b.layer(k);
        auto& lo = out.layers_[static_cast<std::size_t>(k - out.k0_)];
        if (la.empty() && lb.empty()) continue;
        lo.resize(static_cast<std::size_t>(k + out.w_) + 1);
        for (std::size_t j = 0; j < la.size(); ++j) lo[j] = la[j];
        for (std::size_t j = 0; j < lb.size(); ++j) lo[j] += lb[j];
    }
    out.trim();
    return out;
}

LayeredPoly operator-(const LayeredPoly& a, const LayeredPoly& b) {
    LayeredPoly nb = b;
    nb.negate();
    return a + nb;
}

LayeredPoly operator*(const LayeredPoly& a, const LayeredPoly& b) {
    LayeredPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.w_ = a.w_ + b.w_;
    // A layer of the product is exact unless it could receive a contribution
    // from a forgotten layer of either factor.
    out.exact_from_ = 0;
    if (a.exact_from_ > 0) out.exact_from_ = std::max(out.exact_from_, a.exact_from_ + b.deg3());
    if (b.exact_from_ > 0) out.exact_from_ = std::max(out.exact_from_, b.exact_from_ + a.deg3());
    std::int64_t lo = std::max(out.exact_from_, a.k0_ + b.k0_);
    std::int64_t top = a.deg3() + b.deg3();
    if (lo > top) throw std::runtime_error("window exhausted");
    out.k0_ = lo;
    out.layers_.resize(static_cast<std::size_t>(top - lo) + 1);
    for (std::int64_t k = lo; k <= top; ++k) {
        auto& lk = out.layers_[static_cast<std::size_t>(k - lo)];
        lk.resize(static_cast<std::size_t>(k + out.w_) + 1);
        std::int64_t i_lo = std::max(a.k0_, k - b.deg3());
        std::int64_t i_hi = std::min(a.deg3(), k - b.k0_);
        for (std::int64_t i = i_lo; i <= i_hi; ++i) {
            const auto& la = a.layer(i);
            const auto& lb = b.layer(k - i);
            if (la.empty() || lb.empty()) continue;
            conv_acc(lk, la, lb);
        }
    }
    out.trim();
    return out;
}

LayeredPoly LayeredPoly::scaled(const BigInt& c) const {
    LayeredPoly out;
    if (c == 0 || is_zero()) return out;
    out = *this;
    for (auto& l : out.layers_)
        for (auto& v : l) v *= c;
    return out;
}

LayeredPoly LayeredPoly::shifted_u3(std::int64_t t) const {
    LayeredPoly out = *this;
    if (out.is_zero()) return out;
    out.k0_ += t;
    out.w_ -= t;
    // Freshly created low layers are genuinely zero, so an exact value stays
    // exact; a windowed one just carries its unknown band up.
    if (out.exact_from_ > 0) out.exact_from_ += t;
    return out;
}

LayeredPoly LayeredPoly::mul12(const Layer& f) const {
    LayeredPoly out;
    if (is_zero() || layer_zero(f)) return out;
    out.w_ = w_ + static_cast<std::int64_t>(f.size()) - 1;
    out.k0_ = k0_;
    out.layers_.resize(layers_.size());
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        if (layers_[i].empty()) continue;
        out.layers_[i].resize(layers_[i].size() + f.size() - 1);
        conv_acc(out.layers_[i], layers_[i], f);
    }
    out.trim();
    return out;
}

LayeredPoly LayeredPoly::truncated_below(std::int64_t k) const {
    if (is_zero() || k <= exact_from_) return *this;
    LayeredPoly out;
    out.w_ = w_;
    std::int64_t top = deg3();
    out.exact_from_ = std::min(k, top);
    out.k0_ = std::max(k0_, out.exact_from_);
    out.layers_.assign(layers_.begin() + (out.k0_ - k0_), layers_.end());
    return out;
}

void LayeredPoly::trim() {
    while (!layers_.empty() && layer_zero(layers_.back())) layers_.pop_back();
    while (!layers_.empty() && layer_zero(layers_.front())) {
        layers_.erase(layers_.begin());
        ++k0_;
    }
    if (layers_.empty() && exact_from_ > 0) throw std::runtime_error("window exhausted");
    if (layers_.empty()) {
        w_ = 0;
        k0_ = 0;
        exact_from_ = 0;
    }
}

LayeredTriple mrr_base_layered() {
    LayeredTriple t;
    t.n = 0;
    t.e0 = LayeredPoly::from_poly3(Poly3::u1() * Poly3::u1() + Poly3::u1() * Poly3::u2() +
                                   Poly3::u2() * Poly3::u2());
    t.e1 = LayeredPoly::from_poly3(Poly3::u1() + Poly3::u2());
    t.em1 = LayeredPoly::from_poly3(Poly3::one() + Poly3::u3() * (Poly3::u1() + Poly3::u2()));
    return t;
}

LayeredTriple mrr_step_layered(const LayeredTriple& t, std::optional<std::int64_t> window) {
    const std::int64_t p = std::int64_t{1} << (t.n + 1);  // u3 exponent 2^(n+1)
    const LayeredPoly::Layer s12{BigInt(1), BigInt(1)};
    const LayeredPoly::Layer p12{BigInt(0), BigInt(1), BigInt(0)};

    // A width-W window is self-sustaining: the top W layers of every product
    // need only the top W layers of each factor, so drop the rest up front.
    LayeredPoly f0 = t.e0, f1 = t.e1, fm = t.em1;
    if (window) {
        f0 = f0.truncated_below(f0.deg3() - *window + 1);
        f1 = f1.truncated_below(f1.deg3() - *window + 1);
        fm = fm.truncated_below(fm.deg3() - *window + 1);
    }

    LayeredPoly e0sq = f0 * f0;
    LayeredPoly msq = fm * fm;
    LayeredPoly m01 = fm * f0;
    LayeredPoly m11 = fm * f1;
    LayeredPoly e0e1 = f0 * f1;

    LayeredTriple r;
    r.n = t.n + 1;

    LayeredPoly inner0 = m01 - m11.mul12(p12).shifted_u3(1) + e0sq.shifted_u3(p);
    r.e0 = f0 * inner0;

    LayeredPoly inner1 =
        m11 + m01.shifted_u3(1) - m11.mul12(s12).shifted_u3(1) + e0e1.shifted_u3(p);
    r.e1 = f0 * inner1;

    LayeredPoly innerm = msq - msq.mul12(s12).shifted_u3(1) + msq.mul12(p12).shifted_u3(2) +
                         m01.scaled(3).shifted_u3(p) + e0sq.scaled(2).shifted_u3(2 * p) -
                         m01.mul12(s12).shifted_u3(1 + p) - m11.mul12(p12).shifted_u3(1 + p);
    r.em1 = fm * innerm;

    if (window) {
        r.e0 = r.e0.truncated_below(r.e0.deg3() - *window + 1);
        r.e1 = r.e1.truncated_below(r.e1.deg3() - *window + 1);
        r.em1 = r.em1.truncated_below(r.em1.deg3() - *window + 1);
    }
    return r;
}

std::vector<LayeredTriple> mrr_orbit_layered(int n_full, int n_max, std::int64_t window) {
    std::vector<LayeredTriple> orbit;
    orbit.push_back(mrr_base_layered());
    for (int n = 0; n < n_max; ++n) {
        bool full = n < n_full;
        orbit.push_back(
            mrr_step_layered(orbit.back(), full ? std::nullopt : std::optional(window)));
    }
    return orbit;
}

}  // namespace nrs2
