#include "mhq/curves.hpp"

#include <algorithm>

namespace mhq {

Complex QuarticAtZ::eval(const Complex& w) const {
    return (((w + coeff[0]) * w + coeff[1]) * w + coeff[2]) * w + coeff[3];
}

Complex QuarticAtZ::deriv(const Complex& w) const {
    return ((Real(4) * w + Real(3) * coeff[0]) * w + Real(2) * coeff[1]) * w + coeff[2];
}

Real QuarticAtZ::scale(const Complex& w) const {
    Real aw = abs(w);
    Real s = aw * aw * aw * aw;
    s += abs(coeff[0]) * aw * aw * aw;
    s += abs(coeff[1]) * aw * aw;
    s += abs(coeff[2]) * aw;
    s += abs(coeff[3]);
    return s + 1;
}

QuarticAtZ curve_at(CurveKind kind, const Complex& z, const Real& chat) {
    Real c2 = chat * chat;
    Complex z2 = z * z;
    QuarticAtZ q;
    if (kind == CurveKind::kStieltjes) {
        q.coeff[0] = Real(-6) * z;
        q.coeff[1] = Real(12) * z2 + Real(6 - c2);
        q.coeff[2] = Real(-8) * (z2 * z) + Real(2 * c2 - 24) * z;
        q.coeff[3] = Real(24) * z2 - Real(2 * c2);
    } else {
        q.coeff[0] = Real(-2) * z;
        q.coeff[1] = Complex(6 - c2);
        q.coeff[2] = Real(2 * c2) * z;
        q.coeff[3] = Complex(-2 * c2);
    }
    return q;
}

namespace {

// Small per-root residuals alone cannot tell four distinct roots from a
// duplicated simple root with a missed sibling; the first Vieta sum does.
bool roots_cover_quartic(const QuarticAtZ& q, const std::array<Complex, 4>& w) {
    Complex sum(0);
    for (const Complex& v : w) sum = sum + v;
    return abs(sum + q.coeff[0]) <= parse_real("1e-22") * (1 + abs(q.coeff[0]));
}

}  // namespace

bool refine_roots(const QuarticAtZ& q, std::array<Complex, 4>& w, int max_iters,
                  const Real& tol) {
    // Near a branch point two roots nearly coincide and their positions are
    // conditioned like sqrt(eps), so the step criterion can stall; a small
    // relative residual is then the honest convergence signal.
    Real residual_tol = tol_guard(14);
    for (int it = 0; it < max_iters; ++it) {
        Real worst(0);
        for (int i = 0; i < 4; ++i) {
            Complex f = q.eval(w[i]);
            Complex df = q.deriv(w[i]);
            if (df == Complex(0)) {
                w[i] = w[i] + Complex(tol, tol);
                worst = Real(1);
                continue;
            }
            Complex newton = f / df;
            Complex rep(0);
            for (int j = 0; j < 4; ++j)
                if (j != i) rep = rep + Complex(Real(1)) / (w[i] - w[j]);
            Complex denom = Complex(Real(1)) - newton * rep;
            Complex corr = denom == Complex(0) ? newton : newton / denom;
            w[i] = w[i] - corr;
            worst = std::max(worst, abs(corr) / (1 + abs(w[i])));
        }
        if (worst < tol) return roots_cover_quartic(q, w);
        if (it >= 8 && it % 4 == 0) {
            Real res(0);
            for (int i = 0; i < 4; ++i)
                res = std::max(res, abs(q.eval(w[i])) / q.scale(w[i]));
            if (res < residual_tol) return roots_cover_quartic(q, w);
        }
    }
    Real res(0);
    for (int i = 0; i < 4; ++i) res = std::max(res, abs(q.eval(w[i])) / q.scale(w[i]));
    return res < residual_tol && roots_cover_quartic(q, w);
}

void separate_seeds(std::array<Complex, 4>& w) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (abs(w[i] - w[j]) < tol_guard(30) * (1 + abs(w[i])))
                w[j] = w[j] + Complex(Real(i + 1) / 64, Real(j + 1) / 64);
}

std::array<Complex, 4> solve_roots_unlabeled(const QuarticAtZ& q) {
    Real radius(1);
    for (const Complex& a : q.coeff) radius = std::max(radius, abs(a));
    radius += 1;
    Real tol = tol_guard(8);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::array<Complex, 4> w;
        Real phase = Real(2) / 5 + attempt;
        for (int i = 0; i < 4; ++i) {
            Real th = pi() * (2 * i) / 4 + phase;
            w[i] = Complex(radius * cos(th), radius * sin(th));
        }
        separate_seeds(w);
        if (refine_roots(q, w, 500, tol)) return w;
        radius *= 2;
    }
    throw tracking_error("quartic root iteration failed to converge");
}

std::array<Complex, 4> asymptotic_seeds(CurveKind kind, const Complex& z, const Real& chat) {
    Complex one(Real(1));
    std::array<Complex, 4> w;
    if (kind == CurveKind::kStieltjes) {
        w[0] = Real(3) * (one / z);
        w[1] = Real(2) * z + chat;
        w[2] = Real(2) * z;
        w[3] = Real(2) * z - chat;
    } else {
        w[0] = Real(2) * z - Real(3) * (one / z);
        w[1] = (one / z) - chat;
        w[2] = one / z;
        w[3] = (one / z) + chat;
    }
    return w;
}

namespace {

Real min_pairwise_gap(const std::array<Complex, 4>& w) {
    Real gap = abs(w[0] - w[1]);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) gap = std::min(gap, abs(w[i] - w[j]));
    return gap;
}

// Walk one straight leg, adaptively halving the substep when the refinement
// residual spikes or a branch moves by more than a fraction of the current
// pairwise gap. The floor is 1e-6 of the leg length.
void continue_leg(CurveKind kind, const Real& chat, std::array<Complex, 4>& w,
                  const Complex& from, const Complex& to) {
    Real leg_len = abs(to - from);
    if (leg_len == 0) return;
    Real polish_tol = tol_guard(8);
    const Real spike_tol("1e-6");
    Real min_step = Real("1e-6");
    Real t(0);
    Real step = Real(1) / 16;
    while (t < 1) {
        Real tn = std::min(Real(1), t + step);
        Complex z{from.re + (to.re - from.re) * tn, from.im + (to.im - from.im) * tn};
        QuarticAtZ q = curve_at(kind, z, chat);
        std::array<Complex, 4> trial = w;
        bool converged = refine_roots(q, trial, 80, polish_tol);
        bool acceptable = converged;
        if (acceptable) {
            Real gap = min_pairwise_gap(w);
            Real move(0);
            for (int i = 0; i < 4; ++i) move = std::max(move, abs(trial[i] - w[i]));
            if (gap > 0 && move > gap / 2 && step > min_step) acceptable = false;
            for (int i = 0; i < 4 && acceptable; ++i) {
                Real rel = abs(q.eval(trial[i])) / q.scale(trial[i]);
                if (rel > spike_tol) acceptable = false;
            }
        }
        if (!acceptable) {
            if (step <= min_step)
                throw tracking_error("branch continuation failed near z = (" +
                                     to_decimal_string(z.re, 8) + ", " +
                                     to_decimal_string(z.im, 8) + ")");
            step /= 2;
            continue;
        }
        w = trial;
        t = tn;
        step = std::min(step * 2, Real(1) / 16);
    }
}

}  // namespace

BranchValues solve_branches(CurveKind kind, const Complex& z, const Real& chat) {
    Real radius = 10 * (1 + chat);
    Real az = abs(z);
    std::array<Complex, 4> w;

    if (az >= radius) {
        w = asymptotic_seeds(kind, z, chat);
        refine_roots(curve_at(kind, z, chat), w, 200, tol_guard(8));
    } else {
        // Start above (or below) the target abscissa at the asymptotic
        // height and descend vertically; the branch points are on the real
        // axis, so the leg stays clear of them.
        Real sign_im = z.im < 0 ? Real(-1) : Real(1);
        bool near_axis = abs(z.im) < (1 + abs(z.re)) / 10;
        Complex z0 = near_axis ? Complex(z.re, sign_im * radius)
                               : z * (radius / az);
        w = asymptotic_seeds(kind, z0, chat);
        QuarticAtZ q0 = curve_at(kind, z0, chat);
        if (!refine_roots(q0, w, 200, tol_guard(8)))
            throw tracking_error("seed refinement failed at the reference point");
        continue_leg(kind, chat, w, z0, z);
    }

    BranchValues out{z, w};
    Real res = branch_residual(kind, out, chat);
    if (res > tol_guard(12)) throw tracking_error("branch values fail the residual contract");
    return out;
}

Real curve_relation_residual(const Complex& z, const Real& chat) {
    BranchValues s = solve_branches(CurveKind::kStieltjes, z, chat);
    BranchValues x = solve_branches(CurveKind::kComponent, z, chat);
    const Complex& xi = x.values[0];
    Complex two(Real(2));
    Complex mapped = two / xi + two / (xi + chat) + two / (xi - chat);
    return abs(s.values[0] - mapped);
}

Real branch_residual(CurveKind kind, const BranchValues& b, const Real& chat) {
    QuarticAtZ q = curve_at(kind, b.z, chat);
    Real worst(0);
    for (const Complex& v : b.values) worst = std::max(worst, abs(q.eval(v)) / q.scale(v));
    return worst;
}

}  // namespace mhq
