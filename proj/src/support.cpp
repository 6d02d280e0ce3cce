#include "mhq/support.hpp"

#include <array>
#include <stdexcept>

namespace mhq {

bool SupportModel::contains(const Real& x) const {
    Real ax = abs(x);
    if (ax > b) return false;
    if (phase != Phase::kThreeInterval) return true;
    return ax <= *d || ax >= *a;
}

bool SupportModel::interior(const Real& x) const {
    Real ax = abs(x);
    if (!(ax < b)) return false;
    if (phase != Phase::kThreeInterval) return true;
    return ax < *d || ax > *a;
}

std::array<Real, 4> sextic_cubic_coeffs(const Real& chat) {
    Real c2 = chat * chat;
    Real c4 = c2 * c2;
    Real c6 = c4 * c2;
    Real c8 = c4 * c4;
    Real plus = c2 + 4 * chat + 6;
    Real minus = c2 - 4 * chat + 6;
    return {
        -32 * c2 * plus * plus * minus * minus,
        16 * c2 * (c8 + 12 * c6 + 240 * c4 - 1008 * c2 + 432),
        -128 * c4 * (c4 + 18 * c2 - 18),
        256 * c6,
    };
}

Real discriminant_sextic(const Real& chat, const Real& z) {
    auto p = sextic_cubic_coeffs(chat);
    Real u = z * z;
    return ((p[3] * u + p[2]) * u + p[1]) * u + p[0];
}

namespace {

Real cubic_eval(const std::array<Real, 4>& p, const Real& u) {
    return ((p[3] * u + p[2]) * u + p[1]) * u + p[0];
}

// Bracketed Newton for a root of the cubic in (lo, hi); the bracket must
// carry a sign change.
Real cubic_root(const std::array<Real, 4>& p, Real lo, Real hi) {
    Real flo = cubic_eval(p, lo);
    Real x = (lo + hi) / 2;
    Real tol = tol_guard(5);
    for (int it = 0; it < 500; ++it) {
        Real fx = cubic_eval(p, x);
        if (fx == 0) break;
        if ((fx < 0) == (flo < 0))
            lo = x;
        else
            hi = x;
        Real dfx = (3 * p[3] * x + 2 * p[2]) * x + p[1];
        Real xn = dfx == 0 ? (lo + hi) / 2 : x - fx / dfx;
        if (!(xn > lo && xn < hi)) xn = (lo + hi) / 2;
        Real step = abs(xn - x);
        x = xn;
        if (step < tol * std::max(Real(1), abs(x))) break;
    }
    return x;
}

}  // namespace

Real critical_shift() {
    // u = c^2 solves u^3 - 13.5 u^2 - 54 u - 54 = 0; unique positive root.
    Real u(15);
    for (int it = 0; it < 200; ++it) {
        Real f = ((u - Real(27) / 2) * u - 54) * u - 54;
        Real df = (3 * u - 27) * u - 54;
        Real un = u - f / df;
        if (abs(un - u) < tol_guard(4) * u) {
            u = un;
            break;
        }
        u = un;
    }
    return sqrt(u);
}

SupportModel support_intervals(const Real& chat) {
    if (!(chat > 0)) throw std::invalid_argument("support_intervals: need chat > 0");
    Real cstar = critical_shift();
    auto p = sextic_cubic_coeffs(chat);

    SupportModel model{chat, Phase::kOneInterval, Real(0), std::nullopt, std::nullopt};
    if (abs(chat - cstar) <= Real("1e-10")) model.phase = Phase::kCritical;
    else if (chat > cstar) model.phase = Phase::kThreeInterval;

    // Critical points of the cubic bound the root brackets.
    Real disc = 4 * p[2] * p[2] - 12 * p[3] * p[1];
    Real upper = 1 + abs(p[2] / p[3]) + abs(p[1] / p[3]) + abs(p[0] / p[3]);
    if (model.phase == Phase::kThreeInterval) {
        if (!(disc > 0))
            throw std::logic_error("three-interval phase but the cubic has no critical points");
        Real u1 = (-2 * p[2] - sqrt(disc)) / (6 * p[3]);
        Real u2 = (-2 * p[2] + sqrt(disc)) / (6 * p[3]);
        Real r1 = cubic_root(p, Real(0), u1);
        Real r2 = cubic_root(p, u1, u2);
        Real r3 = cubic_root(p, u2, upper);
        model.d = sqrt(r1);
        model.a = sqrt(r2);
        model.b = sqrt(r3);
    } else {
        // One sign change on (0, upper): the cubic is negative at 0 and
        // positive at the upper bound; in the critical phase the middle
        // roots have merged, leaving b well separated.
        Real lo(0);
        if (disc > 0) {
            Real u2 = (-2 * p[2] + sqrt(disc)) / (6 * p[3]);
            if (u2 > 0 && cubic_eval(p, u2) < 0) lo = u2;
        }
        model.b = sqrt(cubic_root(p, lo, upper));
    }
    return model;
}

}  // namespace mhq
