#include "mhq/mhermite.hpp"

#include <algorithm>
#include <stdexcept>

#include "mhq/hermite.hpp"

namespace mhq {

MultiIndex::MultiIndex(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("multi-index needs at least one part");
    for (int v : parts)
        if (v < 0) throw std::invalid_argument("multi-index parts must be >= 0");
}

int MultiIndex::order() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

WeightSystem::WeightSystem(std::vector<Real> shifts) : shifts_(std::move(shifts)) {
    if (shifts_.empty()) throw std::invalid_argument("weight system needs r >= 1");
    for (size_t i = 0; i < shifts_.size(); ++i)
        for (size_t j = i + 1; j < shifts_.size(); ++j)
            if (shifts_[i] == shifts_[j])
                throw std::invalid_argument("weight shifts must be pairwise distinct");
    symmetric_ = shifts_.size() == 3 && shifts_[1] == 0 && shifts_[0] == -shifts_[2] &&
                 shifts_[2] > 0;
}

WeightSystem WeightSystem::symmetric_triple(const Real& c) {
    if (!(c > 0)) throw std::invalid_argument("symmetric triple needs c > 0");
    return WeightSystem({-c, Real(0), c});
}

const Real& WeightSystem::symmetric_shift() const {
    if (!symmetric_) throw std::invalid_argument("weight system is not a symmetric triple");
    return shifts_[2];
}

namespace {

// Predecessor choice: which part is lowered to reach `index` from below.
int step_component(const std::vector<int>& index, int level, StepOrder order) {
    int r = static_cast<int>(index.size());
    if (order == StepOrder::kBlock) {
        for (int j = r - 1; j >= 0; --j)
            if (index[j] > 0) return j;
    }
    int start = (level - 1) % r;
    for (int off = 0; off < r; ++off) {
        int j = (start + off) % r;
        if (index[j] > 0) return j;
    }
    throw std::logic_error("step_component on zero index");
}

}  // namespace

MultiHermiteTable::MultiHermiteTable(const MultiIndex& n, const WeightSystem& w,
                                     StepOrder order)
    : top_(n), weights_(w) {
    if (n.r() != w.r())
        throw std::invalid_argument("multi-index and weight system dimension mismatch");
    const auto& c = w.shifts();
    int r = n.r();

    // Enumerate the box in ascending |index| so every lookup below is ready.
    std::vector<std::vector<int>> level{std::vector<int>(r, 0)};
    Coeffs one = zero_coeffs(1);
    one[0] = 1;
    table_[level[0]] = one;

    for (int lev = 1; lev <= n.order(); ++lev) {
        std::vector<std::vector<int>> next;
        for (const auto& idx : level) {
            for (int k = 0; k < r; ++k) {
                if (idx[k] >= n.parts[k]) continue;
                std::vector<int> up = idx;
                up[k]++;
                if (table_.count(up) || std::count(next.begin(), next.end(), up)) continue;
                next.push_back(up);
            }
        }
        for (const auto& idx : next) {
            int k = step_component(idx, lev, order);
            std::vector<int> prev = idx;
            prev[k]--;
            const Coeffs& hp = table_.at(prev);
            Coeffs res = zero_coeffs(hp.size() + 1);
            for (Eigen::Index i = 0; i < hp.size(); ++i) {
                res[i + 1] += hp[i];
                res[i] -= c[k] / 2 * hp[i];
            }
            for (int j = 0; j < r; ++j) {
                if (prev[j] == 0) continue;
                std::vector<int> down = prev;
                down[j]--;
                const Coeffs& hd = table_.at(down);
                for (Eigen::Index i = 0; i < hd.size(); ++i)
                    res[i] -= Real(prev[j]) / 2 * hd[i];
            }
            table_[idx] = std::move(res);
        }
        level = std::move(next);
    }
}

const Coeffs& MultiHermiteTable::at(const std::vector<int>& index) const {
    auto it = table_.find(index);
    if (it == table_.end()) throw std::invalid_argument("index outside the built box");
    return it->second;
}

MonicPoly build_by_recurrence(const MultiIndex& n, const WeightSystem& w, StepOrder order) {
    MultiHermiteTable table(n, w, order);
    return MonicPoly(table.at(n.parts));
}

MonicPoly build_explicit(const MultiIndex& n, const WeightSystem& w) {
    if (n.r() != w.r())
        throw std::invalid_argument("multi-index and weight system dimension mismatch");
    const auto& c = w.shifts();
    int r = n.r();
    int total = n.order();
    auto hc = hermite_coefficient_table(total);

    auto binom = [](int a, int b) {
        Int q(1);
        for (int i = 0; i < b; ++i) {
            q *= (a - i);
            q /= (i + 1);
        }
        return q;
    };

    Coeffs acc = zero_coeffs(total + 1);
    std::vector<int> k(r, 0);
    while (true) {
        int ks = 0;
        for (int v : k) ks += v;
        Int ib(1);
        for (int j = 0; j < r; ++j) ib *= binom(n.parts[j], k[j]);
        if (ks % 2) ib = -ib;
        Real shift_pow(1);
        bool vanishes = false;
        for (int j = 0; j < r; ++j) {
            int e = n.parts[j] - k[j];
            if (e == 0) continue;
            if (c[j] == 0) {
                vanishes = true;
                break;
            }
            Real p(1);
            for (int i = 0; i < e; ++i) p *= c[j];
            shift_pow *= p;
        }
        if (!vanishes) {
            for (size_t i = 0; i < hc[ks].size(); ++i) {
                if (hc[ks][i] == 0) continue;
                Int prod = ib * hc[ks][i];
                acc[i] += Real(prod) * shift_pow;
            }
        }
        int j = 0;
        while (j < r) {
            if (k[j] < n.parts[j]) {
                k[j]++;
                break;
            }
            k[j] = 0;
            ++j;
        }
        if (j == r) break;
    }
    Real scale = pow(Real(2), -total);
    if (total % 2) scale = -scale;
    for (Eigen::Index i = 0; i < acc.size(); ++i) acc[i] *= scale;
    return MonicPoly(std::move(acc));
}

namespace {

Real coeff_residual(const Coeffs& a, const Coeffs& b) {
    Real worst(0), scale(1);
    Eigen::Index n = std::max(a.size(), b.size());
    for (Eigen::Index i = 0; i < n; ++i) {
        Real av = i < a.size() ? a[i] : Real(0);
        Real bv = i < b.size() ? b[i] : Real(0);
        worst = std::max(worst, abs(av - bv));
        scale = std::max(scale, std::max(abs(av), abs(bv)));
    }
    return worst / scale;
}

}  // namespace

Real lowering_residual(const MultiIndex& n, const WeightSystem& w) {
    if (n.order() < 1) throw std::invalid_argument("lowering needs |n| >= 1");
    MultiHermiteTable table(n, w);
    Coeffs lhs = poly_derivative(table.at(n.parts));
    Coeffs rhs = zero_coeffs(lhs.size());
    for (int j = 0; j < n.r(); ++j) {
        if (n.parts[j] == 0) continue;
        std::vector<int> down = n.parts;
        down[j]--;
        const Coeffs& hd = table.at(down);
        for (Eigen::Index i = 0; i < hd.size(); ++i) rhs[i] += Real(n.parts[j]) * hd[i];
    }
    return coeff_residual(lhs, rhs);
}

Real raising_residual(int j, const MultiIndex& n, const WeightSystem& w) {
    if (j < 1 || j > n.r()) throw std::invalid_argument("weight index out of range");
    if (n.parts[j - 1] < 1)
        throw std::invalid_argument("raising needs n_j >= 1 for the chosen weight");
    MultiHermiteTable table(n, w);
    std::vector<int> down = n.parts;
    down[j - 1]--;
    const Coeffs& hd = table.at(down);
    const Coeffs& hn = table.at(n.parts);
    const Real& cj = w.shifts()[j - 1];

    // H_{n-e_j}' + (-2x + c_j) H_{n-e_j} + 2 H_n
    Coeffs lhs = zero_coeffs(hn.size());
    Coeffs dd = poly_derivative(hd);
    for (Eigen::Index i = 0; i < dd.size(); ++i) lhs[i] += dd[i];
    for (Eigen::Index i = 0; i < hd.size(); ++i) {
        lhs[i + 1] -= 2 * hd[i];
        lhs[i] += cj * hd[i];
    }
    for (Eigen::Index i = 0; i < hn.size(); ++i) lhs[i] += 2 * hn[i];
    return coeff_residual(lhs, zero_coeffs(lhs.size()));
}

Real ode_residual(int n, const WeightSystem& w, const std::vector<Real>& xs) {
    if (!w.symmetric())
        throw std::invalid_argument("the expanded 4th-order equation needs the symmetric triple");
    const Real& c = w.symmetric_shift();
    MonicPoly h = build_by_recurrence(MultiIndex({n, n, n}), w);
    Coeffs d1 = poly_derivative(h.coeffs());
    Coeffs d2 = poly_derivative(d1);
    Coeffs d3 = poly_derivative(d2);
    Coeffs d4 = poly_derivative(d3);

    Real c2 = c * c;
    Real worst(0);
    for (const Real& x : xs) {
        Real y = poly_eval(h, x);
        Real y1 = poly_eval(d1, x);
        Real y2 = poly_eval(d2, x);
        Real y3 = poly_eval(d3, x);
        Real y4 = poly_eval(d4, x);
        Real t1 = y4;
        Real t2 = -6 * x * y3;
        Real t3 = (12 * x * x - c2 - 6) * y2;
        Real t4 = (-8 * x * x * x + (2 * c2 + 12) * x) * y1;
        Real rhs = -2 * n * (3 * y2 - 12 * x * y1 + (12 * x * x - c2 - 6) * y);
        Real lhs = t1 + t2 + t3 + t4;
        Real scale = Real(1);
        for (const Real& t : {t1, t2, t3, t4, rhs}) scale = std::max(scale, abs(t));
        worst = std::max(worst, abs(lhs - rhs) / (1 + scale));
    }
    return worst;
}

Real orthogonality_integral(const MonicPoly& h, int k, int j, const WeightSystem& w,
                            bool normalized) {
    if (j < 1 || j > w.r()) throw std::invalid_argument("weight index out of range");
    MomentVector mom = gaussian_moments(w.shifts()[j - 1], h.degree() + k + 1, normalized);
    Real acc(0);
    for (int i = 0; i <= h.degree(); ++i) acc += h[i] * mom.m[i + k];
    return acc;
}

}  // namespace mhq
