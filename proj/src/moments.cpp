#include "mhq/moments.hpp"

#include <stdexcept>

namespace mhq {

MomentVector gaussian_moments(const Real& c, int count, bool normalized) {
    if (count < 1) throw std::invalid_argument("gaussian_moments: count must be >= 1");
    MomentVector mv{c, normalized, zero_coeffs(count)};
    mv.m[0] = normalized ? Real(1) : gaussian_mass(c);
    if (count > 1) mv.m[1] = c / 2 * mv.m[0];
    for (int j = 1; j + 1 < count; ++j)
        mv.m[j + 1] = c / 2 * mv.m[j] + Real(j) / 2 * mv.m[j - 1];
    return mv;
}

Real gaussian_mass(const Real& c) { return sqrt(pi()) * exp(c * c / 4); }

Real integrate_poly(const Coeffs& p, const MomentVector& mom) {
    if (p.size() > mom.m.size())
        throw std::invalid_argument("integrate_poly: not enough moments");
    Real acc(0);
    for (Eigen::Index i = 0; i < p.size(); ++i) acc += p[i] * mom.m[i];
    return acc;
}

}  // namespace mhq
