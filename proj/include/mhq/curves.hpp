#pragma once

#include <array>
#include <stdexcept>

#include "mhq/complex.hpp"

namespace mhq {

/// Branch continuation left the curve (residual spike survived the minimum
/// step, or labels collided).
struct tracking_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Which degree-4 curve in (z, value) is being solved.
///  kStieltjes: S^4 - 6zS^3 + (12z^2-c^2+6)S^2 + (-8z^3+2c^2z-24z)S + 2(12z^2-c^2),
///    branches labeled by S_1 = 3/z, S_2 = 2z+c, S_3 = 2z, S_4 = 2z-c at infinity.
///  kComponent: x^4 - 2zx^3 + (6-c^2)x^2 + 2c^2zx - 2c^2 (the cubic
///    coefficient is pinned to -2z by the branch expansions at infinity),
///    branches x_1 = 2z-3/z, x_2 = -c+1/z, x_3 = 1/z, x_4 = c+1/z.
enum class CurveKind { kStieltjes, kComponent };

/// Monic quartic in the curve variable at a fixed z.
struct QuarticAtZ {
    std::array<Complex, 4> coeff;  // a3, a2, a1, a0 for w^4 + a3 w^3 + ... + a0

    Complex eval(const Complex& w) const;
    Complex deriv(const Complex& w) const;
    /// Residual scale: sum of the term magnitudes at w, plus 1.
    Real scale(const Complex& w) const;
};

QuarticAtZ curve_at(CurveKind kind, const Complex& z, const Real& chat);

/// Four labeled branch values at z; values[i] is branch i+1 per the
/// asymptotic labels above.
struct BranchValues {
    Complex z;
    std::array<Complex, 4> values;
};

/// Simultaneous root refinement (Ehrlich-Aberth) from the given seeds.
/// Returns false if the iteration did not reach tol within max_iters.
bool refine_roots(const QuarticAtZ& q, std::array<Complex, 4>& w, int max_iters,
                  const Real& tol);

/// Branch values at infinity evaluated at z; exact labels far out, usable
/// warm-start seeds everywhere off the curve's bad set.
std::array<Complex, 4> asymptotic_seeds(CurveKind kind, const Complex& z, const Real& chat);

/// Nudge near-coincident seeds apart (the Aberth repulsion term needs
/// pairwise-distinct iterates).
void separate_seeds(std::array<Complex, 4>& w);

/// All four roots at a point, no labels: Aberth from circle seeds.
std::array<Complex, 4> solve_roots_unlabeled(const QuarticAtZ& q);

/// Labeled branches by homotopy continuation from the asymptotic regime
/// (|z0| = 10(1+chat)); valid for z off the real axis or |z| beyond the
/// support. Residual contract: each value satisfies its quartic to
/// 10^-(P-12) relative.
BranchValues solve_branches(CurveKind kind, const Complex& z, const Real& chat);

/// |S_1(z) - (2/x + 2/(x+c) + 2/(x-c))| with x the matched component branch
/// (x_1; both curves solved independently).
Real curve_relation_residual(const Complex& z, const Real& chat);

/// Relative quartic residual of every branch value (max over the four).
Real branch_residual(CurveKind kind, const BranchValues& b, const Real& chat);

}  // namespace mhq
