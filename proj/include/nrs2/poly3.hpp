#pragma once

#include "nrs2/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace nrs2 {

// Monomial u1^e1 * u2^e2 * u3^e3.
struct Monomial3 {
    std::uint32_t e1 = 0, e2 = 0, e3 = 0;

    std::uint64_t total_degree() const {
        return std::uint64_t(e1) + e2 + e3;
    }
    friend bool operator==(const Monomial3&, const Monomial3&) = default;
};

// Graded lexicographic order with u1 > u2 > u3: compare total degree first,
// then exponents of u1, u2, u3 in turn.
struct GradedLexLess {
    bool operator()(const Monomial3& a, const Monomial3& b) const {
        if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
        if (a.e1 != b.e1) return a.e1 < b.e1;
        if (a.e2 != b.e2) return a.e2 < b.e2;
        return a.e3 < b.e3;
    }
};

// Sparse polynomial in u1, u2, u3 over the rationals.  The term map never
// holds a zero coefficient, so representations are canonical and printing is
// byte-stable.
class Poly3 {
  public:
    using TermMap = std::map<Monomial3, Rational, GradedLexLess>;

    Poly3() = default;
    explicit Poly3(const Rational& c);
    Poly3(const Rational& c, const Monomial3& m);

    static Poly3 zero() { return Poly3(); }
    static Poly3 one() { return Poly3(Rational(1)); }
    static Poly3 u1() { return Poly3(Rational(1), Monomial3{1, 0, 0}); }
    static Poly3 u2() { return Poly3(Rational(1), Monomial3{0, 1, 0}); }
    static Poly3 u3() { return Poly3(Rational(1), Monomial3{0, 0, 1}); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of m (zero if absent).
    Rational coeff(const Monomial3& m) const;

    Poly3& operator+=(const Poly3& rhs);
    Poly3& operator-=(const Poly3& rhs);
    Poly3& operator*=(const Poly3& rhs);
    Poly3& operator*=(const Rational& c);

    friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
    friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
    friend Poly3 operator*(const Poly3& a, const Poly3& b);
    friend Poly3 operator*(Poly3 a, const Rational& c) { return a *= c; }
    friend Poly3 operator*(const Rational& c, Poly3 a) { return a *= c; }
    Poly3 operator-() const;

    friend bool operator==(const Poly3&, const Poly3&) = default;

    Rational eval(const Rational& v1, const Rational& v2, const Rational& v3) const;

    // Largest u3 exponent.  Throws std::domain_error on the zero polynomial,
    // which has no meaningful degree.
    std::int64_t deg_u3() const;

    // Coefficient of u3^deg_u3 as a polynomial in u1, u2 (u3-free).
    Poly3 lead_u3() const;

    // u3 -> u1*u2*u3.
    Poly3 substitute_u3_u1u2u3() const;

    // Multiply by u1^a * u2^b * u3^c.
    Poly3 scale_by_monomial(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

    // Exact division.  Returns nullopt when rhs does not divide this exactly.
    // Division is by leading-term elimination in the monomial order; the
    // divisor must be nonzero.
    std::optional<Poly3> divide_exact(const Poly3& rhs) const;

    // u1 <-> u2 swap.
    Poly3 swap_u1_u2() const;

    bool is_homogeneous() const;
    std::uint64_t total_degree() const;  // throws on zero
    bool depends_on_u3() const;

    // Descending monomial order, e.g. "u1^2 + u1*u2 + u2^2"; rationals print
    // as p/q.  The zero polynomial prints "0".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly3& p);

  private:
    void add_term(const Monomial3& m, const Rational& c);
    TermMap terms_;
};

// Elementary symmetric polynomials of u1, u2, u3; building blocks for the
// closed-form error polynomials.
Poly3 elem_sym1();
Poly3 elem_sym2();
Poly3 elem_sym3();

}  // namespace nrs2
