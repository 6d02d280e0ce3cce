#pragma once

#include <random>
#include <vector>

#include "mhq/integrate.hpp"
#include "mhq/poly.hpp"

namespace mhq::testing {

// Deterministic generator for the property-style tests.
inline std::mt19937& rng() {
    static std::mt19937 gen(20240811);
    return gen;
}

inline Real random_real(double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return Real(dist(rng()));
}

inline Coeffs random_monic(int degree) {
    Coeffs c = zero_coeffs(degree + 1);
    for (int i = 0; i < degree; ++i) c[i] = random_real(-10.0, 10.0);
    c[degree] = 1;
    return c;
}

inline Real rel_coeff_diff(const Coeffs& a, const Coeffs& b) {
    Real worst(0), scale(1);
    Eigen::Index n = std::max(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        Real av = i < a.size() ? a[i] : Real(0);
        Real bv = i < b.size() ? b[i] : Real(0);
        worst = std::max(worst, abs(av - bv));
        scale = std::max(scale, std::max(abs(av), abs(bv)));
    }
    return worst / scale;
}

}  // namespace mhq::testing
