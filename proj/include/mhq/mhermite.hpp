#pragma once

#include <map>
#include <vector>

#include "mhq/moments.hpp"
#include "mhq/poly.hpp"

namespace mhq {

/// Orthogonality-condition counts (n_1, ..., n_r), all parts >= 0.
struct MultiIndex {
    std::vector<int> parts;

    explicit MultiIndex(std::vector<int> p);
    int order() const;                  // |n| = sum of parts
    int r() const { return static_cast<int>(parts.size()); }
};

/// The r Gaussian weights e^{-x^2 + c_j x} with pairwise distinct shifts.
/// symmetric() is true for the triple (-c, 0, c), c > 0, which is the
/// regime the asymptotic machinery is specialized to.
class WeightSystem {
  public:
    explicit WeightSystem(std::vector<Real> shifts);

    /// The symmetric triple (-c, 0, c).
    static WeightSystem symmetric_triple(const Real& c);

    const std::vector<Real>& shifts() const { return shifts_; }
    int r() const { return static_cast<int>(shifts_.size()); }
    bool symmetric() const { return symmetric_; }
    /// Positive shift of the symmetric triple.
    const Real& symmetric_shift() const;

  private:
    std::vector<Real> shifts_;
    bool symmetric_ = false;
};

/// Which nearest-neighbor predecessor each lattice index steps down to when
/// the table is filled. Any choice yields the same polynomials; two are kept
/// so path independence is observable.
enum class StepOrder { kRoundRobin, kBlock };

/// Memoized recurrence table over the multi-index box {0..n_1} x ... x {0..n_r}:
///   H_{m} = (x - c_k/2) H_{m-e_k} - 1/2 sum_j (m-e_k)_j H_{m-e_k-e_j}.
/// Every sub-index polynomial is kept, so neighbor lookups for the
/// differential identities are free after one build.
class MultiHermiteTable {
  public:
    MultiHermiteTable(const MultiIndex& n, const WeightSystem& w,
                      StepOrder order = StepOrder::kRoundRobin);

    const Coeffs& at(const std::vector<int>& index) const;
    const MultiIndex& top() const { return top_; }
    const WeightSystem& weights() const { return weights_; }

  private:
    MultiIndex top_;
    WeightSystem weights_;
    std::map<std::vector<int>, Coeffs> table_;
};

/// Monic multiple Hermite polynomial via the nearest-neighbor recurrence.
MonicPoly build_by_recurrence(const MultiIndex& n, const WeightSystem& w,
                              StepOrder order = StepOrder::kRoundRobin);

/// The same polynomial from the Rodrigues-expansion double sum (exact
/// integer binomials and classical Hermite coefficients, shift powers in
/// the working scalar).
MonicPoly build_explicit(const MultiIndex& n, const WeightSystem& w);

/// Max-coefficient residual of H' = sum_j n_j H_{n-e_j}, relative to the
/// largest coefficient magnitude involved.
Real lowering_residual(const MultiIndex& n, const WeightSystem& w);

/// Residual of the raising identity for weight j (1-based):
/// H_{n-e_j}' + (-2x + c_j) H_{n-e_j} + 2 H_n = 0, relative scaling as above.
Real raising_residual(int j, const MultiIndex& n, const WeightSystem& w);

/// Residual of the fourth-order differential equation satisfied by
/// y = H_{(n,n,n)} for the symmetric triple:
///   y'''' - 6xy''' + (12x^2-c^2-6)y'' + (-8x^3+(2c^2+12)x)y'
///     = -2n (3y'' - 12xy' + (12x^2-c^2-6)y),
/// max over the sample points of |LHS - RHS| / (1 + largest term magnitude).
Real ode_residual(int n, const WeightSystem& w, const std::vector<Real>& xs);

/// integral of x^k H(x) w_j(x) dx over the real line, exact via moments.
/// Used by the orthogonality tests; j is 1-based.
Real orthogonality_integral(const MonicPoly& h, int k, int j, const WeightSystem& w,
                            bool normalized = false);

}  // namespace mhq
