#include "mhq/poly.hpp"

#include <stdexcept>
#include <vector>

namespace mhq {

MonicPoly::MonicPoly(Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() == 0) throw std::invalid_argument("empty coefficient vector");
    Real lead = coeffs_[coeffs_.size() - 1];
    if (abs(lead - 1) > tol_guard(20))
        throw std::invalid_argument("leading coefficient is not 1");
    coeffs_[coeffs_.size() - 1] = 1;
}

Real MonicPoly::coeff_scale() const {
    Real m(0);
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) m = std::max(m, abs(coeffs_[i]));
    return m;
}

Real poly_eval(const Coeffs& p, const Real& x) {
    Real acc = p[p.size() - 1];
    for (Eigen::Index i = p.size() - 2; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

Real poly_eval(const MonicPoly& p, const Real& x) { return poly_eval(p.coeffs(), x); }

Coeffs poly_derivative(const Coeffs& p) {
    if (p.size() <= 1) return zero_coeffs(1);
    Coeffs d = zero_coeffs(p.size() - 1);
    for (Eigen::Index i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Real(static_cast<int>(i));
    return d;
}

Coeffs poly_derivative(const MonicPoly& p) { return poly_derivative(p.coeffs()); }

std::pair<MonicPoly, Real> deflate_at(const MonicPoly& p, const Real& x0) {
    if (p.degree() < 1) throw std::invalid_argument("cannot deflate degree-0 polynomial");
    Coeffs q = zero_coeffs(p.degree());
    Real carry = p[p.degree()];
    for (int i = p.degree() - 1; i >= 0; --i) {
        q[i] = carry;
        carry = p[i] + carry * x0;
    }
    return {MonicPoly(std::move(q)), carry};
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
    Coeffs r = zero_coeffs(a.size() + b.size() - 1);
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

MonicPoly poly_from_roots(const std::vector<Real>& roots) {
    Coeffs c = zero_coeffs(1);
    c[0] = 1;
    for (const Real& r : roots) {
        Coeffs next = zero_coeffs(c.size() + 1);
        for (Eigen::Index i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return MonicPoly(std::move(c));
}

}  // namespace mhq
