#pragma once

#include "mhq/poly.hpp"

namespace mhq {

/// Power moments of a Gaussian weight with shift parameter c.
/// Raw: m[j] = integral of x^j e^{-x^2+cx}; normalized: moments of the
/// unit-mass normal density with mean c/2 and variance 1/2 (raw divided by
/// sqrt(pi) e^{c^2/4}). Either way m satisfies
///   m[j+1] = (c/2) m[j] + (j/2) m[j-1].
struct MomentVector {
    Real c;
    bool normalized;
    Coeffs m;
};

MomentVector gaussian_moments(const Real& c, int count, bool normalized);

/// Conversion factor between raw and normalized conventions:
/// sqrt(pi) * e^{c^2/4}.
Real gaussian_mass(const Real& c);

/// integral of p(x) against the weight, via the moment dot product.
Real integrate_poly(const Coeffs& p, const MomentVector& mom);

}  // namespace mhq
