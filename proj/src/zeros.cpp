#include "mhq/zeros.hpp"

#include <algorithm>

namespace mhq {

LocalizationIntervals bounding_intervals(int n, const Real& c) {
    if (n < 1 || !(c > 0)) throw std::invalid_argument("bounding_intervals: need n >= 1, c > 0");
    Real s = sqrt(Real(4 * n + 1));
    LocalizationIntervals L;
    L.lo1 = -c / 2 - s;
    L.hi1 = -c / 2 + s;
    L.lo2 = -s;
    L.hi2 = s;
    L.lo3 = c / 2 - s;
    L.hi3 = c / 2 + s;
    L.disjoint = c > 4 * s;
    return L;
}

namespace {

struct Bracket {
    Real lo, hi;
};

// Polish one sign-change bracket with bisection-safeguarded Newton on the
// undeflated polynomial. Stops when the step drops below
// 10^-(P-10) * max(1,|x|). Residual history is recorded for the
// convergence-monotonicity contract.
std::pair<Real, std::vector<Real>> polish(const MonicPoly& p, const Coeffs& dp,
                                          Bracket b, const Real& step_tol) {
    Real lo = b.lo, hi = b.hi;
    Real flo = poly_eval(p, lo);
    Real x = (lo + hi) / 2;
    std::vector<Real> residuals;
    const size_t keep = 8;
    for (int it = 0; it < 600; ++it) {
        Real fx = poly_eval(p, x);
        residuals.push_back(abs(fx));
        if (residuals.size() > keep) residuals.erase(residuals.begin());
        if (fx == 0) break;
        if ((fx < 0) == (flo < 0))
            lo = x;
        else
            hi = x;
        Real dfx = poly_eval(dp, x);
        Real xn = dfx == 0 ? (lo + hi) / 2 : x - fx / dfx;
        if (!(xn > lo && xn < hi)) xn = (lo + hi) / 2;
        Real step = abs(xn - x);
        x = xn;
        if (step < step_tol * std::max(Real(1), abs(x))) break;
    }
    return {x, residuals};
}

}  // namespace

ZeroSet find_zeros(const MonicPoly& p, const Real& lo, const Real& hi) {
    int deg = p.degree();
    if (deg == 0) return {};
    Coeffs dp = poly_derivative(p);
    Real step_tol = tol_guard(10);

    int grid = 16 * deg;
    const int grid_max = 1024 * deg;
    std::vector<Bracket> brackets;
    while (true) {
        brackets.clear();
        Real h = (hi - lo) / grid;
        Real xprev = lo;
        Real fprev = poly_eval(p, xprev);
        for (int i = 1; i <= grid; ++i) {
            Real x = i == grid ? hi : lo + h * i;
            Real f = poly_eval(p, x);
            int nudges = 0;
            while (f == 0 && nudges < 4) {  // grid point landed on a root
                x += h / (1 << (20 + nudges));
                f = poly_eval(p, x);
                ++nudges;
            }
            if ((fprev < 0) != (f < 0)) brackets.push_back({xprev, x});
            xprev = x;
            fprev = f;
        }
        if (static_cast<int>(brackets.size()) == deg) break;
        if (grid >= grid_max)
            throw isolation_error("found " + std::to_string(brackets.size()) + " of " +
                                  std::to_string(deg) +
                                  " sign changes; multiple roots or insufficient precision");
        grid *= 2;
    }

    ZeroSet zs;
    zs.zeros.reserve(deg);
    zs.polish_residuals.reserve(deg);
    for (const Bracket& b : brackets) {
        auto [x, hist] = polish(p, dp, b, step_tol);
        zs.zeros.push_back(x);
        zs.polish_residuals.push_back(std::move(hist));
    }

    for (size_t i = 0; i + 1 < zs.zeros.size(); ++i)
        if (!(zs.zeros[i] < zs.zeros[i + 1]))
            throw isolation_error("polished zeros are not strictly increasing");

    // Residual contract: |p(z)| <= 10^-(P-15) * scale.
    Real scale_coeff = p.coeff_scale();
    Real rtol = tol_guard(15);
    for (const Real& z : zs.zeros) {
        Real scale = scale_coeff * pow(std::max(Real(1), abs(z)), deg);
        if (abs(poly_eval(p, z)) > rtol * scale)
            throw isolation_error("polished zero fails the residual contract");
    }
    return zs;
}

ZeroSet multi_hermite_zeros(const MultiIndex& n, const WeightSystem& w) {
    MonicPoly h = build_by_recurrence(n, w);
    Real s = sqrt(Real(4 * n.order() + 1));
    Real lo = w.shifts()[0] / 2, hi = w.shifts()[0] / 2;
    for (const Real& c : w.shifts()) {
        lo = std::min(lo, c / 2);
        hi = std::max(hi, c / 2);
    }
    return find_zeros(h, lo - s - 1, hi + s + 1);
}

IntervalCounts zero_interval_counts(const ZeroSet& z, const LocalizationIntervals& L) {
    IntervalCounts counts;
    for (const Real& x : z.zeros) {
        if (x >= L.lo1 && x <= L.hi1)
            counts.k1++;
        else if (x >= L.lo2 && x <= L.hi2)
            counts.k2++;
        else if (x >= L.lo3 && x <= L.hi3)
            counts.k3++;
        else
            counts.outside++;
    }
    return counts;
}

}  // namespace mhq
