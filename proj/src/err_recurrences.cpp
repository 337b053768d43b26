#include "nrs2/err_recurrences.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace nrs2 {

namespace {

std::int64_t min_exp(const Poly3& p, int axis) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& [m, c] : p.terms()) {
        std::int64_t e = axis == 0 ? m.e1 : axis == 1 ? m.e2 : m.e3;
        if (e < best) best = e;
    }
    return best;
}

// Strips the largest power of u1+u2+u3, returning (quotient, exponent).
std::pair<Poly3, std::int64_t> strip_s(Poly3 p) {
    Poly3 s = Poly3::u1() + Poly3::u2() + Poly3::u3();
    std::int64_t k = 0;
    for (;;) {
        auto q = p.divide_exact(s);
        if (!q) return {std::move(p), k};
        p = std::move(*q);
        ++k;
    }
}

Poly3 strip_monomial(const Poly3& p, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    Poly3 out;
    for (const auto& [m, coef] : p.terms()) {
        if (m.e1 < a || m.e2 < b || m.e3 < c)
            throw std::domain_error("strip_monomial: exponent underflow");
        out += Poly3(coef, Monomial3{m.e1 - a, m.e2 - b, m.e3 - c});
    }
    return out;
}

}  // namespace

UValues<Poly3> poly_u() { return {Poly3::u1(), Poly3::u2(), Poly3::u3()}; }

UValues2<Poly3> poly_u2() { return {Poly3::u1(), Poly3::u2()}; }

UValues<Rational> rational_u(const Rational& u1, const Rational& u2, const Rational& u3) {
    return {u1, u2, u3};
}

ErrTriple<Poly3> mrr_base_poly() { return mrr_base(poly_u()); }

std::vector<ErrTriple<Poly3>> orr_orbit_poly(int n_max) {
    std::vector<ErrTriple<Poly3>> orbit;
    orbit.push_back(orr_base(poly_u()));
    for (int n = 0; n < n_max; ++n) orbit.push_back(orr_step(orbit.back(), poly_u()));
    return orbit;
}

std::vector<ErrTriple<Poly3>> mrr_orbit_poly(int n_max) {
    std::vector<ErrTriple<Poly3>> orbit;
    orbit.push_back(mrr_base_poly());
    for (int n = 0; n < n_max; ++n) orbit.push_back(mrr_step(orbit.back(), poly_u()));
    return orbit;
}

std::vector<ErrTriple<Poly3>> lead_orbit_poly(int n_max) {
    std::vector<ErrTriple<Poly3>> orbit;
    orbit.push_back(lead_base(poly_u2()));
    for (int n = 0; n < n_max; ++n) orbit.push_back(lead_step(orbit.back(), poly_u2()));
    return orbit;
}

ErrTriple<Poly3> top_layer(const ErrTriple<Poly3>& t) {
    return {t.n, t.e0.lead_u3(), t.e1.lead_u3(), t.em1.lead_u3()};
}

ReductionTrace reduce_raw_level(const ErrTriple<Poly3>& raw) {
    ReductionTrace tr;
    tr.n = raw.n;
    const Poly3* comps[3] = {&raw.e0, &raw.e1, &raw.em1};
    Poly3 out[3];
    for (int i = 0; i < 3; ++i) {
        auto [no_s, s_exp] = strip_s(*comps[i]);
        tr.s_exp[static_cast<std::size_t>(i)] = s_exp;
        Poly3 sub = no_s.substitute_u3_u1u2u3();
        std::int64_t k12 = std::min(min_exp(sub, 0), min_exp(sub, 1));
        std::int64_t k3 = min_exp(sub, 2);
        tr.u12_exp[static_cast<std::size_t>(i)] = k12;
        tr.u3_exp[static_cast<std::size_t>(i)] = k3;
        out[i] = strip_monomial(sub, static_cast<std::uint32_t>(k12),
                                static_cast<std::uint32_t>(k12), static_cast<std::uint32_t>(k3));
    }
    tr.reduced = {raw.n, std::move(out[0]), std::move(out[1]), std::move(out[2])};
    return tr;
}

std::vector<std::vector<BigInt>> lead_coeff_rows(int n_max) {
    std::vector<std::vector<BigInt>> rows;
    auto orbit = lead_orbit_poly(n_max);
    for (const auto& t : orbit) {
        const Poly3& p = t.e0;
        auto d = p.total_degree();
        std::vector<BigInt> row;
        row.reserve(d + 1);
        for (std::uint64_t k = 0; k <= d; ++k) {
            Rational c = p.coeff(Monomial3{static_cast<std::uint32_t>(d - k),
                                           static_cast<std::uint32_t>(k), 0});
            if (!is_integer(c))
                throw std::logic_error("lead_coeff_rows: non-integer coefficient");
            row.push_back(num(c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string lead_coeff_csv(int n_max) {
    std::ostringstream os;
    os << "level,degree,coefficients\n";
    auto rows = lead_coeff_rows(n_max);
    for (std::size_t n = 0; n < rows.size(); ++n) {
        os << n << "," << rows[n].size() - 1 << ",\"";
        for (std::size_t k = 0; k < rows[n].size(); ++k) {
            if (k) os << " ";
            os << rows[n][k];
        }
        os << "\"\n";
    }
    return os.str();
}

}  // namespace nrs2
