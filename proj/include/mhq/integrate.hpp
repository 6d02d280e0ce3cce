#pragma once

#include "mhq/scalar.hpp"

namespace mhq {

/// Tanh-sinh quadrature on [lo, hi]; robust to integrable endpoint behavior
/// (square-root vanishing, logarithmic blowup). Step size is 2^-levels;
/// integrands much narrower than the interval need deeper levels.
/// Diagnostic-grade accuracy; production moment paths use the exact
/// recurrences instead.
template <typename F>
Real integrate_tanh_sinh(F&& f, const Real& lo, const Real& hi, int levels = 5) {
    Real mid = (lo + hi) / 2;
    Real rad = (hi - lo) / 2;
    Real h = pow(Real(2), -levels);
    // abscissas collapse onto the endpoints (and get skipped) past t ~ 4.7
    // at any practical precision
    int imax = (5 << levels);
    Real half_pi = pi() / 2;
    Real sum(0);
    for (int i = -imax; i <= imax; ++i) {
        Real t = h * i;
        Real sh = half_pi * sinh(t);
        Real x = tanh(sh);
        if (abs(x) >= 1) continue;
        Real ch = cosh(sh);
        Real w = half_pi * cosh(t) / (ch * ch);
        sum += w * f(mid + rad * x);
    }
    return sum * h * rad;
}

}  // namespace mhq
