#include "mhq/density.hpp"

#include <stdexcept>

namespace mhq {

namespace {

const Real& boundary_offset() {
    static const Real eps("1e-20");
    return eps;
}

// On the open support the quartic at x + i eps has exactly one branch pair
// straddling the cut; its lower member carries the density. The remaining
// roots sit within O(eps) of the real axis, so picking the most negative
// imaginary part is unambiguous.
Real jump_density(CurveKind kind, const Real& x, const Real& chat) {
    QuarticAtZ q = curve_at(kind, Complex(x, boundary_offset()), chat);
    std::array<Complex, 4> roots = solve_roots_unlabeled(q);
    Real lowest(0);
    for (const Complex& w : roots) lowest = std::min(lowest, w.im);
    return -lowest / pi();
}

}  // namespace

Real zero_density(const Real& x, const Real& chat, const SupportModel& support) {
    if (!support.interior(x)) return Real(0);
    return jump_density(CurveKind::kStieltjes, x, chat) / 3;
}

Real zero_density(const Real& x, const Real& chat) {
    return zero_density(x, chat, support_intervals(chat));
}

Real component_density(int j, const Real& x, const Real& chat, const SupportModel& support) {
    if (j < 1 || j > 3) throw std::invalid_argument("component index out of range");
    if (support.phase != Phase::kThreeInterval)
        throw std::invalid_argument(
            "component densities are defined in the three-interval phase only");
    bool inside = false;
    if (j == 1)
        inside = x > -support.b && x < -*support.a;
    else if (j == 2)
        inside = x > -*support.d && x < *support.d;
    else
        inside = x > *support.a && x < support.b;
    if (!inside) return Real(0);
    return jump_density(CurveKind::kComponent, x, chat);
}

Real component_density(int j, const Real& x, const Real& chat) {
    return component_density(j, x, chat, support_intervals(chat));
}

std::vector<DensitySample> density_profile(const Real& chat, int samples) {
    if (samples < 2) throw std::invalid_argument("density_profile: need >= 2 samples");
    SupportModel support = support_intervals(chat);
    bool three = support.phase == Phase::kThreeInterval;
    std::vector<DensitySample> rows;
    rows.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        Real x = -support.b + 2 * support.b * i / (samples - 1);
        DensitySample row{x, zero_density(x, chat, support), Real(0), Real(0), Real(0)};
        if (three) {
            row.nu1 = component_density(1, x, chat, support);
            row.nu2 = component_density(2, x, chat, support);
            row.nu3 = component_density(3, x, chat, support);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace mhq
