#pragma once

#include <optional>

#include "mhq/scalar.hpp"

namespace mhq {

enum class Phase { kOneInterval, kThreeInterval, kCritical };

/// Limiting support of the scaled zero distribution: [-b, b] in the
/// one-interval phase, [-b,-a] U [-d,d] U [a,b] past the transition.
struct SupportModel {
    Real chat;
    Phase phase;
    Real b;
    std::optional<Real> d, a;

    bool contains(const Real& x) const;
    /// Strict interior test (used to gate densities to exactly zero).
    bool interior(const Real& x) const;
};

/// The degree-6 discriminant polynomial in z whose negative set is the
/// support; even in z.
Real discriminant_sextic(const Real& chat, const Real& z);

/// Coefficients (ascending) of the cubic in u = z^2 equivalent to the sextic.
std::array<Real, 4> sextic_cubic_coeffs(const Real& chat);

/// The phase transition point: positive root of c^6 - 13.5 c^4 - 54 c^2 - 54.
Real critical_shift();

/// Classify the phase and extract endpoints by solving the cubic in u = z^2
/// with bracketed Newton on the exact coefficients. chat within 1e-10 of the
/// transition reports Phase::kCritical.
SupportModel support_intervals(const Real& chat);

}  // namespace mhq
