#pragma once

#include "nrs2/rational.hpp"

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nrs2 {

struct IterState {
    Rational x0, x1;

    friend bool operator==(const IterState&, const IterState&) = default;
};

// Raised when the update hits a state where the linearization cannot be
// inverted; carries the level and the offending state for diagnostics.
class SingularJacobian : public std::runtime_error {
public:
    SingularJacobian(int level, IterState at);

    int level() const { return level_; }
    const IterState& state() const { return at_; }

private:
    int level_;
    IterState at_;
};

// Cubic with reciprocal roots u1, u2, u3:
//   f(z) = (1 - u1 z)(1 - u2 z)(1 - u3 z) = a0 + a1 z + a2 z^2 + a3 z^3,
// driven by the coupled two-variable Newton-style update on (x0, x1).
// Requires u1, u2 nonzero and a1, a2 nonzero (they appear in denominators).
class Cubic {
public:
    explicit Cubic(std::array<Rational, 3> u);

    const std::array<Rational, 3>& u() const { return u_; }
    const Rational& a(int k) const { return a_.at(static_cast<std::size_t>(k)); }

    IterState start() const;        // both coordinates -a1/a2
    IterState fixed_point() const;  // ((u1+u2)/(u1 u2), (u1+u2+u3)/(u1 u2))

    // Auxiliary map whose zero is the fixed point:
    //   F0 = x0 + a1/a2 + x0^2 a3/a2 + x1 a0 a3/(a1 a2)
    //   F1 = x1 + a1/a2 + x0 x1 a3/a2
    std::pair<Rational, Rational> aux(const IterState& s) const;

    std::array<Rational, 4> jacobian(const IterState& s) const;  // row-major 2x2
    Rational jacobian_det(const IterState& s) const;

    // One update x -> x - J(x)^{-1} F(x); `level` only labels the error.
    IterState step(const IterState& s, int level = -1) const;

    // States c_0 .. c_{n_max}, c_0 = start().
    std::vector<IterState> iterate(int n_max) const;

private:
    std::array<Rational, 3> u_;
    std::array<Rational, 4> a_;
};

}  // namespace nrs2
