#pragma once

#include <vector>

#include "mhq/curves.hpp"
#include "mhq/support.hpp"

namespace mhq {

/// Density of the limiting scaled-zero distribution:
/// v(x) = |Im S_1(x + i eps)| / (3 pi) on the support, exactly 0 outside.
/// eps is the fixed boundary offset 1e-20.
Real zero_density(const Real& x, const Real& chat, const SupportModel& support);
Real zero_density(const Real& x, const Real& chat);

/// Component equilibrium densities nu_j' (j = 1, 2, 3 on [-b,-a], [-d,d],
/// [a,b]); defined in the three-interval phase only, exactly 0 off the
/// component's interval.
Real component_density(int j, const Real& x, const Real& chat, const SupportModel& support);
Real component_density(int j, const Real& x, const Real& chat);

/// One sampled row of all four densities.
struct DensitySample {
    Real x, v, nu1, nu2, nu3;
};

/// Rows at `samples` points spread over [-b, b] (endpoints included).
std::vector<DensitySample> density_profile(const Real& chat, int samples);

}  // namespace mhq
