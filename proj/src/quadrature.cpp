#include "mhq/quadrature.hpp"

#include <algorithm>

namespace mhq {

QuadratureRule build_rule(const MultiIndex& n, const WeightSystem& w, bool normalized) {
    MonicPoly h = build_by_recurrence(n, w);
    ZeroSet zs = multi_hermite_zeros(n, w);
    int N = h.degree();
    int r = w.r();

    std::vector<MomentVector> moms;
    moms.reserve(r);
    for (int j = 0; j < r; ++j)
        moms.push_back(gaussian_moments(w.shifts()[j], std::max(N, 1), normalized));

    Coeffs dh = poly_derivative(h);
    QuadratureRule rule{zs.zeros, WeightMatrix(r, N), normalized, n, w};
    rule.weights.setZero();
    for (int k = 0; k < N; ++k) {
        auto [quot, rem] = deflate_at(h, zs.zeros[k]);
        Real slope = poly_eval(dh, zs.zeros[k]);
        for (int j = 0; j < r; ++j)
            rule.weights(j, k) = integrate_poly(quot.coeffs(), moms[j]) / slope;
    }
    return rule;
}

QuadratureRule build_rule(int n, const WeightSystem& w, bool normalized) {
    return build_rule(MultiIndex(std::vector<int>(w.r(), n)), w, normalized);
}

Real apply_rule(const QuadratureRule& rule, int j, const std::vector<Real>& fvals) {
    if (j < 1 || j > rule.system.r()) throw std::invalid_argument("weight index out of range");
    if (static_cast<int>(fvals.size()) != rule.node_count())
        throw std::invalid_argument("apply_rule: need one value per node");
    Real acc(0);
    for (int k = 0; k < rule.node_count(); ++k) acc += rule.weights(j - 1, k) * fvals[k];
    return acc;
}

WeightMatrix exactness_report(const QuadratureRule& rule, int up_to) {
    if (up_to < 0 || 3 * up_to > 8 * rule.index.order())
        throw std::invalid_argument("exactness_report: degree range is 0..8n");
    int r = rule.system.r();
    WeightMatrix err(up_to + 1, r);
    err.setZero();
    int N = rule.node_count();
    std::vector<Real> powers(N, Real(1));
    for (int j = 1; j <= r; ++j) {
        MomentVector mom = gaussian_moments(rule.system.shifts()[j - 1], up_to + 1,
                                            rule.normalized);
        std::fill(powers.begin(), powers.end(), Real(1));
        for (int d = 0; d <= up_to; ++d) {
            if (d > 0)
                for (int k = 0; k < N; ++k) powers[k] *= rule.nodes[k];
            Real approx = apply_rule(rule, j, powers);
            err(d, j - 1) = abs(approx - mom.m[d]) / std::max(Real(1), abs(mom.m[d]));
        }
    }
    return err;
}

namespace {

int diagonal_n(const QuadratureRule& rule) {
    const auto& parts = rule.index.parts;
    if (rule.system.r() != 3 || !rule.system.symmetric() || parts[0] != parts[1] ||
        parts[1] != parts[2])
        throw std::invalid_argument("operation needs the symmetric diagonal rule (n,n,n)");
    return parts[0];
}

}  // namespace

FactoredNodes factor_by_intervals(const QuadratureRule& rule, const LocalizationIntervals& L) {
    int n = diagonal_n(rule);
    ZeroSet zs{rule.nodes, {}};
    IntervalCounts counts = zero_interval_counts(zs, L);
    if (counts.k1 != n || counts.k2 != n || counts.k3 != n || counts.outside != 0)
        throw std::invalid_argument("zeros are not split (n,n,n) by the intervals");
    std::vector<Real> left(rule.nodes.begin(), rule.nodes.begin() + n);
    std::vector<Real> middle(rule.nodes.begin() + n, rule.nodes.begin() + 2 * n);
    std::vector<Real> right(rule.nodes.begin() + 2 * n, rule.nodes.end());
    return {poly_from_roots(left), poly_from_roots(middle), poly_from_roots(right)};
}

std::vector<SignPattern> sign_pattern_check(const QuadratureRule& rule) {
    int n = diagonal_n(rule);
    int N = rule.node_count();
    std::vector<SignPattern> out;
    for (int j = 1; j <= 3; ++j) {
        SignPattern sp{true, 0};
        for (int k = 1; k <= N; ++k) {
            const Real& lam = rule.weights(j - 1, k - 1);
            int want;  // +1 positive, -1 negative
            if (j == 1)
                want = k <= n ? +1 : ((k - n + 1) % 2 == 0 ? +1 : -1);
            else if (j == 2)
                want = (k > n && k <= 2 * n) ? +1
                       : k <= n              ? ((k - n) % 2 == 0 ? +1 : -1)
                                             : ((k + 1) % 2 == 0 ? +1 : -1);
            else
                want = k > 2 * n ? +1 : (k % 2 == 0 ? +1 : -1);
            bool ok = want > 0 ? lam > 0 : lam < 0;
            if (!ok) {
                sp.matches = false;
                sp.first_violation = k;
                break;
            }
        }
        out.push_back(sp);
    }
    return out;
}

Real gauss_factor_oracle(const QuadratureRule& rule, const FactoredNodes& f, int j) {
    int n = diagonal_n(rule);
    if (j < 1 || j > 3) throw std::invalid_argument("weight index out of range");
    const MonicPoly* factors[3] = {&f.left, &f.middle, &f.right};
    const MonicPoly& own = *factors[j - 1];

    Real worst(0);
    for (int block = 1; block <= 3; ++block) {
        const MonicPoly& fb = *factors[block - 1];

        // Weight-function polynomial part s(x) and the per-node multiplier:
        // own block:  s = product of the other two factors
        // side block: s = own^2 * remaining factor
        Coeffs s;
        if (block == j) {
            int a = 0;
            while (a == j - 1) ++a;
            int b = 0;
            while (b == j - 1 || b == a) ++b;
            s = poly_mul(factors[a]->coeffs(), factors[b]->coeffs());
        } else {
            int other = 0;
            while (other == j - 1 || other == block - 1) ++other;
            s = poly_mul(poly_mul(own.coeffs(), own.coeffs()), factors[other]->coeffs());
        }

        // Moments of s(x) w_j(x): M_i = sum_m s_m mu_{i+m}.
        MomentVector mu = gaussian_moments(rule.system.shifts()[j - 1],
                                           static_cast<int>(s.size()) + fb.degree(),
                                           rule.normalized);
        Coeffs M = zero_coeffs(fb.degree());
        for (Eigen::Index i = 0; i < M.size(); ++i) {
            Real acc(0);
            for (Eigen::Index m = 0; m < s.size(); ++m) acc += s[m] * mu.m[i + m];
            M[i] = acc;
        }

        Coeffs dfb = poly_derivative(fb);
        for (int t = 0; t < n; ++t) {
            int k = (block - 1) * n + t;  // 0-based node index in the full rule
            const Real& xk = rule.nodes[k];
            auto [quot, rem] = deflate_at(fb, xk);
            Real oracle = integrate_poly(quot.coeffs(), {mu.c, mu.normalized, M}) /
                          poly_eval(dfb, xk);
            Real multiplier(1);
            if (block == j) {
                for (int o = 0; o < 3; ++o)
                    if (o != j - 1) multiplier *= poly_eval(*factors[o], xk);
            } else {
                int other = 0;
                while (other == j - 1 || other == block - 1) ++other;
                Real ow = poly_eval(own, xk);
                multiplier = ow * ow * poly_eval(*factors[other], xk);
            }
            Real lhs = rule.weights(j - 1, k) * multiplier;
            Real denom = std::max(abs(lhs), abs(oracle));
            if (denom > 0) worst = std::max(worst, abs(lhs - oracle) / denom);
        }
    }
    return worst;
}

std::vector<DecayEntry> decay_profile(const QuadratureRule& rule, int j) {
    int n = diagonal_n(rule);
    int N = rule.node_count();
    Real root_n = sqrt(Real(n));
    std::vector<DecayEntry> out;
    for (int k = 1; k <= N; ++k) {
        bool positive_block = (j == 1 && k <= n) || (j == 2 && k > n && k <= 2 * n) ||
                              (j == 3 && k > 2 * n);
        if (positive_block) continue;
        const Real& lam = rule.weights(j - 1, k - 1);
        out.push_back({k, rule.nodes[k - 1] / root_n, pow(abs(lam), Real(1) / n)});
    }
    return out;
}

}  // namespace mhq
