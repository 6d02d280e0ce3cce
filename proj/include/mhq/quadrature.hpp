#pragma once

#include "mhq/zeros.hpp"

namespace mhq {

/// Simultaneous Gaussian rule: one node set (the zeros of H_n), one weight
/// row per Gaussian weight. weights(j-1, k) is the k-th weight of weight
/// index j (0-based in storage; the sign-pattern laws below count 1-based).
struct QuadratureRule {
    std::vector<Real> nodes;
    WeightMatrix weights;  // r x N
    bool normalized;
    MultiIndex index;
    WeightSystem system;

    int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Interpolatory weights at the zeros of H_n against each weight, via
/// synthetic division and exact moments (never numeric integration).
QuadratureRule build_rule(const MultiIndex& n, const WeightSystem& w, bool normalized);
QuadratureRule build_rule(int n, const WeightSystem& w, bool normalized);

/// sum_k lambda_k^{(j)} f(x_k); j is 1-based, fvals are the integrand values
/// at rule.nodes.
Real apply_rule(const QuadratureRule& rule, int j, const std::vector<Real>& fvals);

/// Relative error of integrating x^d for every d <= up_to and every weight:
/// entry (d, j-1) = |rule(x^d) - m_d^{(j)}| / max(1, |m_d^{(j)}|).
WeightMatrix exactness_report(const QuadratureRule& rule, int up_to);

/// H_{(n,n,n)} split into the three monic factors carrying the zeros in
/// I_1, I_2, I_3 (left, middle, right).
struct FactoredNodes {
    MonicPoly left, middle, right;
};

FactoredNodes factor_by_intervals(const QuadratureRule& rule, const LocalizationIntervals& L);

/// Sign-pattern verdict for one weight index against the block-positivity /
/// alternating-tail law; first_violation is 1-based, 0 when clean.
struct SignPattern {
    bool matches;
    int first_violation;
};

/// Patterns for j = 1, 2, 3 (symmetric diagonal rules only):
///   j=1: lambda_k > 0 for k <= n;             sign = (-1)^{k-n+1} for k > n
///   j=2: sign = (-1)^{k-n} for k <= n;        lambda_k > 0 for n < k <= 2n;
///        sign = (-1)^{k+1} for k > 2n
///   j=3: sign = (-1)^k for k <= 2n;           lambda_k > 0 for k > 2n
std::vector<SignPattern> sign_pattern_check(const QuadratureRule& rule);

/// Factorized-weight identities (diagonal symmetric rules): for each block
/// and weight, compare lambda against an independently computed Gauss /
/// Lagrange interpolatory weight for the deflated measure, built from exact
/// moments of (factor-product) * w_j. Returns the worst relative
/// discrepancy. j is 1-based.
Real gauss_factor_oracle(const QuadratureRule& rule, const FactoredNodes& f, int j = 1);

/// |lambda_k^{(j)}|^{1/n} for the alternating-block entries (k outside the
/// j-th positive block), paired with the scaled node x_k / sqrt(n).
struct DecayEntry {
    int k;  // 1-based node index
    Real scaled_node;
    Real nth_root;
};

std::vector<DecayEntry> decay_profile(const QuadratureRule& rule, int j);

}  // namespace mhq
