#pragma once

#include <array>
#include <vector>

#include "mhq/density.hpp"

namespace mhq {

/// A unit measure sampled on one interval: density values at sin-graded
/// nodes, integrated piecewise-linearly. mass_scale rescales the measure
/// (0.5 gives half the measure, for linearity checks).
struct SampledMeasure {
    Real lo, hi;
    std::vector<Real> x, f;
    Real mass_scale{1};
};

/// Sample a component density on its interval with M pieces (M+1 nodes,
/// cos-clustered toward the endpoints where the density vanishes like a
/// square root), then normalize the piecewise-linear mass to 1.
SampledMeasure sample_component(int j, const Real& chat, const SupportModel& support, int pieces);

/// Logarithmic potential U(x; measure) = -integral log|x-y| dmu(y), computed
/// in closed form per linear piece; the log singularity integrates exactly,
/// so x may sit anywhere including inside the support.
Real log_potential(const SampledMeasure& measure, const Real& x);

/// Discrete approximation from a zero group: -(1/n) sum_i log|x - z_i/sqrt(n)|.
Real discrete_potential(const std::vector<Real>& group_zeros, int n, const Real& x);

/// Lagrange-multiplier diagnostics for the three variational conditions:
/// combination j is U-weighted (2 on its own measure) plus the external
/// field V_j, constant on the j-th support interval and >= that constant
/// elsewhere.
struct VariationalReport {
    Real ell1, ell2, ell3;
    Real on_support_residual;      // max |combination - ell| over support samples
    Real off_support_margin;       // min (combination - ell) over off-support samples
    std::array<Real, 3> flatness;  // per-condition max - min over its interval
};

/// Evaluate the conditions at `grid` points per interval (and a matching
/// off-support sweep), with the measures sampled at `pieces` pieces.
VariationalReport variational_report(const Real& chat, int grid = 25, int pieces = 1024);

/// The three potentials at x from prebuilt measures, plus the combination
/// values; exposed for the CLI potentials dump.
struct PotentialTriple {
    Real u1, u2, u3;
};

PotentialTriple potentials_at(const std::vector<SampledMeasure>& measures, const Real& x);

}  // namespace mhq
