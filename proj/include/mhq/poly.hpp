#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <utility>

#include "mhq/scalar.hpp"

namespace mhq {

/// Dense coefficient vector, ascending degree order.
using Coeffs = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
using WeightMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

inline Coeffs zero_coeffs(Eigen::Index n) {
    Coeffs c(n);
    c.setZero();
    return c;
}

/// Monic polynomial: ascending coefficients, leading entry exactly 1.
class MonicPoly {
  public:
    /// Takes ownership of `coeffs`; the leading coefficient must already be
    /// within one guard-tolerance of 1 and is pinned to exactly 1.
    explicit MonicPoly(Coeffs coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Coeffs& coeffs() const { return coeffs_; }
    const Real& operator[](int i) const { return coeffs_[i]; }

    /// Largest coefficient magnitude.
    Real coeff_scale() const;

  private:
    Coeffs coeffs_;
};

/// Horner evaluation.
Real poly_eval(const Coeffs& p, const Real& x);
Real poly_eval(const MonicPoly& p, const Real& x);

/// Coefficient-wise derivative; degree 0 yields the zero polynomial
/// (a single zero coefficient).
Coeffs poly_derivative(const Coeffs& p);
Coeffs poly_derivative(const MonicPoly& p);

/// Synthetic division by (x - x0): p(x) = (x - x0) * quotient(x) + remainder,
/// with remainder = p(x0).
std::pair<MonicPoly, Real> deflate_at(const MonicPoly& p, const Real& x0);

/// Product of two coefficient vectors.
Coeffs poly_mul(const Coeffs& a, const Coeffs& b);

/// Monic polynomial with the given roots.
MonicPoly poly_from_roots(const std::vector<Real>& roots);

}  // namespace mhq
