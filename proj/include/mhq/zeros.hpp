#pragma once

#include <stdexcept>
#include <vector>

#include "mhq/mhermite.hpp"
#include "mhq/poly.hpp"

namespace mhq {

/// Root isolation could not produce deg(p) brackets (multiple roots or
/// insufficient precision).
struct isolation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All real zeros of a polynomial, strictly ascending, each polished on the
/// undeflated polynomial. polish_residuals[i] holds |p(x)| over the final
/// Newton iterations of zero i (most recent last).
struct ZeroSet {
    std::vector<Real> zeros;
    std::vector<std::vector<Real>> polish_residuals;
};

/// Closed intervals around -c/2, 0, c/2 that contain the zeros of
/// H_{(n,n,n)}; disjoint is set iff c > 4 sqrt(4n+1).
struct LocalizationIntervals {
    Real lo1, hi1;  // [-c/2 - s, -c/2 + s], s = sqrt(4n+1)
    Real lo2, hi2;  // [-s, s]
    Real lo3, hi3;  // [c/2 - s, c/2 + s]
    bool disjoint;
};

LocalizationIntervals bounding_intervals(int n, const Real& c);

/// Isolate by adaptive sign-change scan on [lo, hi] (grid 16*deg, doubled on
/// shortfall up to 2^10*deg), then safeguarded Newton on the original
/// polynomial. Throws isolation_error if deg(p) sign changes never appear.
ZeroSet find_zeros(const MonicPoly& p, const Real& lo, const Real& hi);

/// Zeros of the multiple Hermite polynomial for (n, w), using the standard
/// enclosure min_j c_j/2 - sqrt(4|n|+1) - 1 .. max_j c_j/2 + sqrt(4|n|+1) + 1.
ZeroSet multi_hermite_zeros(const MultiIndex& n, const WeightSystem& w);

struct IntervalCounts {
    int k1 = 0, k2 = 0, k3 = 0, outside = 0;
};

IntervalCounts zero_interval_counts(const ZeroSet& z, const LocalizationIntervals& L);

}  // namespace mhq
