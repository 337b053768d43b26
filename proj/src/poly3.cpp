#include "nrs2/poly3.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace nrs2 {

Poly3::Poly3(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial3{}, c);
}

Poly3::Poly3(const Rational& c, const Monomial3& m) {
    if (c != 0) terms_.emplace(m, c);
}

Rational Poly3::coeff(const Monomial3& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly3::add_term(const Monomial3& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly3& Poly3::operator+=(const Poly3& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly3& Poly3::operator-=(const Poly3& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
    Poly3 out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial3 m{ma.e1 + mb.e1, ma.e2 + mb.e2, ma.e3 + mb.e3};
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Poly3& Poly3::operator*=(const Poly3& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly3& Poly3::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly3 Poly3::operator-() const {
    Poly3 out(*this);
    for (auto& [m, v] : out.terms_) v = -v;
    return out;
}

Rational Poly3::eval(const Rational& v1, const Rational& v2, const Rational& v3) const {
    // Horner is overkill for the term counts we evaluate; plain powers with a
    // small cache per variable keep this exact and simple.
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::uint32_t i = 0; i < m.e1; ++i) t *= v1;
        for (std::uint32_t i = 0; i < m.e2; ++i) t *= v2;
        for (std::uint32_t i = 0; i < m.e3; ++i) t *= v3;
        acc += t;
    }
    return acc;
}

std::int64_t Poly3::deg_u3() const {
    if (terms_.empty()) throw std::domain_error("deg_u3: zero polynomial");
    std::int64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max<std::int64_t>(d, m.e3);
    return d;
}

Poly3 Poly3::lead_u3() const {
    std::int64_t d = deg_u3();
    Poly3 out;
    for (const auto& [m, c] : terms_)
        if (m.e3 == d) out.add_term(Monomial3{m.e1, m.e2, 0}, c);
    return out;
}

Poly3 Poly3::substitute_u3_u1u2u3() const {
    Poly3 out;
    for (const auto& [m, c] : terms_)
        out.add_term(Monomial3{m.e1 + m.e3, m.e2 + m.e3, m.e3}, c);
    return out;
}

Poly3 Poly3::scale_by_monomial(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    Poly3 out;
    for (const auto& [m, v] : terms_)
        out.terms_.emplace(Monomial3{m.e1 + a, m.e2 + b, m.e3 + c}, v);
    return out;
}

std::optional<Poly3> Poly3::divide_exact(const Poly3& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    Poly3 rem(*this), quot;
    const auto& [dm, dc] = *rhs.terms_.rbegin();  // leading term of divisor
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        if (rm.e1 < dm.e1 || rm.e2 < dm.e2 || rm.e3 < dm.e3) return std::nullopt;
        Monomial3 q{rm.e1 - dm.e1, rm.e2 - dm.e2, rm.e3 - dm.e3};
        Rational qc = rc / dc;
        quot.add_term(q, qc);
        rem -= rhs * Poly3(qc, q);
    }
    return quot;
}

Poly3 Poly3::swap_u1_u2() const {
    Poly3 out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(Monomial3{m.e2, m.e1, m.e3}, c);
    return out;
}

bool Poly3::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
        if (m.total_degree() != d) return false;
    return true;
}

std::uint64_t Poly3::total_degree() const {
    if (terms_.empty()) throw std::domain_error("total_degree: zero polynomial");
    return terms_.rbegin()->first.total_degree();
}

bool Poly3::depends_on_u3() const {
    for (const auto& [m, c] : terms_)
        if (m.e3 > 0) return true;
    return false;
}

namespace {

// "u1^2*u2" with no surrounding separators.
void print_monomial(std::ostream& os, const Monomial3& m) {
    bool first = true;
    auto var = [&](const char* name, std::uint32_t e) {
        if (e == 0) return;
        if (!first) os << "*";
        os << name;
        if (e > 1) os << "^" << e;
        first = false;
    };
    var("u1", m.e1);
    var("u2", m.e2);
    var("u3", m.e3);
}

}  // namespace

std::string Poly3::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly3& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool constant = m.total_degree() == 0;
        if (constant) {
            os << to_string(a);
        } else if (a != 1) {
            os << to_string(a) << "*";
            print_monomial(os, m);
        } else {
            print_monomial(os, m);
        }
        first = false;
    }
    return os;
}

Poly3 elem_sym1() { return Poly3::u1() + Poly3::u2() + Poly3::u3(); }

Poly3 elem_sym2() {
    return Poly3::u1() * Poly3::u2() + Poly3::u1() * Poly3::u3() + Poly3::u2() * Poly3::u3();
}

Poly3 elem_sym3() { return Poly3::u1() * Poly3::u2() * Poly3::u3(); }

}  // namespace nrs2
