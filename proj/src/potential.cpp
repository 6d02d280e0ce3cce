#include "mhq/potential.hpp"

#include <algorithm>
#include <stdexcept>

namespace mhq {

SampledMeasure sample_component(int j, const Real& chat, const SupportModel& support,
                                int pieces) {
    if (pieces < 8) throw std::invalid_argument("sample_component: too few pieces");
    Real lo, hi;
    if (j == 1) {
        lo = -support.b;
        hi = -*support.a;
    } else if (j == 2) {
        lo = -*support.d;
        hi = *support.d;
    } else {
        lo = *support.a;
        hi = support.b;
    }
    SampledMeasure m{lo, hi, {}, {}, Real(1)};
    m.x.reserve(pieces + 1);
    m.f.reserve(pieces + 1);
    Real mid = (lo + hi) / 2;
    Real rad = (hi - lo) / 2;
    Real half_pi = pi() / 2;
    for (int i = 0; i <= pieces; ++i) {
        Real theta = -half_pi + pi() * i / pieces;
        Real x = mid + rad * sin(theta);
        m.x.push_back(x);
        m.f.push_back(i == 0 || i == pieces ? Real(0)
                                            : component_density(j, x, chat, support));
    }
    Real mass(0);
    for (size_t i = 0; i + 1 < m.x.size(); ++i)
        mass += (m.f[i] + m.f[i + 1]) / 2 * (m.x[i + 1] - m.x[i]);
    for (Real& v : m.f) v /= mass;
    return m;
}

namespace {

// Antiderivatives of log|t| and t log|t|; both vanish at t = 0, which is
// what lets pieces containing the singularity integrate in closed form.
Real g1(const Real& t) { return t == 0 ? Real(0) : t * log(abs(t)) - t; }
Real g2(const Real& t) { return t == 0 ? Real(0) : t * t * (log(abs(t)) / 2 - Real(1) / 4); }

}  // namespace

Real log_potential(const SampledMeasure& measure, const Real& x) {
    Real u(0);
    for (size_t i = 0; i + 1 < measure.x.size(); ++i) {
        const Real& x0 = measure.x[i];
        const Real& x1 = measure.x[i + 1];
        if (x1 == x0) continue;
        Real slope = (measure.f[i + 1] - measure.f[i]) / (x1 - x0);
        Real at_x = measure.f[i] + slope * (x - x0);
        Real t0 = x0 - x;
        Real t1 = x1 - x;
        u -= at_x * (g1(t1) - g1(t0)) + slope * (g2(t1) - g2(t0));
    }
    return u * measure.mass_scale;
}

Real discrete_potential(const std::vector<Real>& group_zeros, int n, const Real& x) {
    if (group_zeros.empty() || n < 1)
        throw std::invalid_argument("discrete_potential: empty group");
    Real scale = sqrt(Real(n));
    Real u(0);
    for (const Real& z : group_zeros) {
        Real dist = abs(x - z / scale);
        if (dist == 0) throw std::invalid_argument("discrete_potential: x hits a node");
        u -= log(dist);
    }
    return u / n;
}

PotentialTriple potentials_at(const std::vector<SampledMeasure>& measures, const Real& x) {
    return {log_potential(measures[0], x), log_potential(measures[1], x),
            log_potential(measures[2], x)};
}

VariationalReport variational_report(const Real& chat, int grid, int pieces) {
    SupportModel support = support_intervals(chat);
    if (support.phase != Phase::kThreeInterval)
        throw std::invalid_argument("variational conditions need the three-interval phase");
    std::vector<SampledMeasure> nu;
    for (int j = 1; j <= 3; ++j) nu.push_back(sample_component(j, chat, support, pieces));

    auto combo = [&](int j, const Real& x) {
        PotentialTriple u = potentials_at(nu, x);
        Real field = x * x;
        if (j == 1) field += chat * x;
        if (j == 3) field -= chat * x;
        Real total = u.u1 + u.u2 + u.u3 + field;
        if (j == 1) total += u.u1;
        if (j == 2) total += u.u2;
        if (j == 3) total += u.u3;
        return total;
    };

    const Real b = support.b, a = *support.a, d = *support.d;
    struct Interval {
        Real lo, hi;
    };
    Interval ivals[3] = {{-b, -a}, {-d, d}, {a, b}};

    VariationalReport rep{Real(0), Real(0), Real(0), Real(0), Real(0),
                          {Real(0), Real(0), Real(0)}};
    Real ells[3];
    for (int j = 1; j <= 3; ++j)
        ells[j - 1] = combo(j, (ivals[j - 1].lo + ivals[j - 1].hi) / 2);
    rep.ell1 = ells[0];
    rep.ell2 = ells[1];
    rep.ell3 = ells[2];

    // On-support flatness, sampled slightly inside the endpoints where the
    // piecewise-linear tables are exact enough.
    Real residual(0);
    for (int j = 1; j <= 3; ++j) {
        Real lo = ivals[j - 1].lo, hi = ivals[j - 1].hi;
        Real inset = (hi - lo) / 200;
        Real mn, mx;
        for (int i = 0; i < grid; ++i) {
            Real x = lo + inset + (hi - lo - 2 * inset) * i / (grid - 1);
            Real v = combo(j, x);
            if (i == 0) {
                mn = v;
                mx = v;
            } else {
                mn = std::min(mn, v);
                mx = std::max(mx, v);
            }
            residual = std::max(residual, abs(v - ells[j - 1]));
        }
        rep.flatness[j - 1] = mx - mn;
    }
    rep.on_support_residual = residual;

    // Off-support margin: sweep [-b-2, b+2], skipping the condition's own
    // interval (with a small standoff so endpoint roundoff does not count).
    Real margin("1e30");
    int sweep = 8 * grid;
    for (int j = 1; j <= 3; ++j) {
        Real lo = ivals[j - 1].lo, hi = ivals[j - 1].hi;
        Real standoff = (hi - lo) / 100;
        for (int i = 0; i <= sweep; ++i) {
            Real x = -b - 2 + (2 * b + 4) * i / sweep;
            if (x > lo - standoff && x < hi + standoff) continue;
            margin = std::min(margin, combo(j, x) - ells[j - 1]);
        }
    }
    rep.off_support_margin = margin;
    return rep;
}

}  // namespace mhq
