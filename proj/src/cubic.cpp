#include "nrs2/cubic.hpp"

#include <sstream>

namespace nrs2 {

namespace {

std::string singular_msg(int level, const IterState& at) {
    std::ostringstream os;
    os << "singular jacobian at level " << level << ", state (" << to_string(at.x0) << ", "
       << to_string(at.x1) << ")";
    return os.str();
}

}  // namespace

SingularJacobian::SingularJacobian(int level, IterState at)
    : std::runtime_error(singular_msg(level, at)), level_(level), at_(std::move(at)) {}

Cubic::Cubic(std::array<Rational, 3> u) : u_(std::move(u)) {
    if (u_[0] == 0 || u_[1] == 0)
        throw std::domain_error("cubic: u1 and u2 must be nonzero");
    const Rational &u1 = u_[0], &u2 = u_[1], &u3 = u_[2];
    a_[0] = 1;
    a_[1] = -(u1 + u2 + u3);
    a_[2] = u1 * u2 + u1 * u3 + u2 * u3;
    a_[3] = -(u1 * u2 * u3);
    if (a_[1] == 0 || a_[2] == 0)
        throw std::domain_error("cubic: coefficients a1 and a2 must be nonzero");
}

IterState Cubic::start() const {
    Rational x = -a_[1] / a_[2];
    return {x, x};
}

IterState Cubic::fixed_point() const {
    Rational p = u_[0] * u_[1];
    return {(u_[0] + u_[1]) / p, (u_[0] + u_[1] + u_[2]) / p};
}

std::pair<Rational, Rational> Cubic::aux(const IterState& s) const {
    Rational r12 = a_[1] / a_[2];
    Rational r32 = a_[3] / a_[2];
    Rational f0 = s.x0 + r12 + s.x0 * s.x0 * r32 + s.x1 * a_[0] * a_[3] / (a_[1] * a_[2]);
    Rational f1 = s.x1 + r12 + s.x0 * s.x1 * r32;
    return {f0, f1};
}

std::array<Rational, 4> Cubic::jacobian(const IterState& s) const {
    Rational r32 = a_[3] / a_[2];
    return {1 + 2 * s.x0 * r32, a_[0] * a_[3] / (a_[1] * a_[2]), s.x1 * r32, 1 + s.x0 * r32};
}

Rational Cubic::jacobian_det(const IterState& s) const {
    auto j = jacobian(s);
    return j[0] * j[3] - j[1] * j[2];
}

IterState Cubic::step(const IterState& s, int level) const {
    auto [f0, f1] = aux(s);
    auto j = jacobian(s);
    Rational det = j[0] * j[3] - j[1] * j[2];
    if (det == 0) throw SingularJacobian(level, s);
    Rational d0 = (j[3] * f0 - j[1] * f1) / det;
    Rational d1 = (j[0] * f1 - j[2] * f0) / det;
    return {s.x0 - d0, s.x1 - d1};
}

std::vector<IterState> Cubic::iterate(int n_max) const {
    std::vector<IterState> states;
    states.push_back(start());
    for (int n = 0; n < n_max; ++n) states.push_back(step(states.back(), n));
    return states;
}

}  // namespace nrs2
