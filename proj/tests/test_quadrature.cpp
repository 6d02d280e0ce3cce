#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/LU>

#include "mhq/checks.hpp"
#include "mhq/quadrature.hpp"
#include "test_support.hpp"

using namespace mhq;

namespace {

const QuadratureRule& table_rule() {
    static const QuadratureRule rule =
        build_rule(10, WeightSystem::symmetric_triple(Real(15)), true);
    return rule;
}

}  // namespace

TEST_CASE("reference-table spot values") {
    const QuadratureRule& rule = table_rule();
    CHECK(abs(rule.weights(0, 0) - parse_real("6.887653865e-9")) <=
          parse_real("5e-6") * parse_real("6.887653865e-9"));
    CHECK(abs(rule.weights(0, 6) - parse_real("0.3725933960")) <=
          parse_real("5e-6") * parse_real("0.3725933960"));
    CHECK(abs(rule.weights(0, 29) - parse_real("-3.903292274e-19")) <=
          parse_real("5e-4") * parse_real("3.903292274e-19"));
}

TEST_CASE("normalized rows sum to one") {
    const QuadratureRule& rule = table_rule();
    for (int j = 0; j < 3; ++j) {
        Real sum(0);
        for (int k = 0; k < rule.node_count(); ++k) sum += rule.weights(j, k);
        CHECK(abs(sum - 1) <= tol_guard(20));
    }
}

TEST_CASE("raw rows sum to the weight mass") {
    QuadratureRule rule = build_rule(2, WeightSystem::symmetric_triple(Real(15)), false);
    for (int j = 0; j < 3; ++j) {
        Real sum(0);
        for (int k = 0; k < rule.node_count(); ++k) sum += rule.weights(j, k);
        Real mass = gaussian_mass(rule.system.shifts()[j]);
        CHECK(abs(sum - mass) <= tol_guard(20) * mass);
    }
}

TEST_CASE("small rule matches the linear-system oracle") {
    // 3x3 Vandermonde solve against the same moments
    QuadratureRule rule = build_rule(1, WeightSystem::symmetric_triple(Real(15)), true);
    REQUIRE(rule.node_count() == 3);
    for (int j = 1; j <= 3; ++j) {
        MomentVector mom = gaussian_moments(rule.system.shifts()[j - 1], 3, true);
        WeightMatrix V(3, 3);
        V.setZero();
        Eigen::Matrix<Real, Eigen::Dynamic, 1> rhs(3);
        for (int d = 0; d < 3; ++d) {
            for (int k = 0; k < 3; ++k) V(d, k) = pow(rule.nodes[k], d);
            rhs(d) = mom.m[d];
        }
        Eigen::Matrix<Real, Eigen::Dynamic, 1> lam = V.fullPivLu().solve(rhs);
        for (int k = 0; k < 3; ++k)
            CHECK(abs(lam(k) - rule.weights(j - 1, k)) <=
                  tol_guard(15) * (1 + abs(lam(k))));
    }
}

TEST_CASE("apply_rule on plain integrands") {
    const QuadratureRule& rule = table_rule();
    int N = rule.node_count();
    std::vector<Real> ones(N, Real(1));
    CHECK(abs(apply_rule(rule, 1, ones) - 1) <= tol_guard(20));
    std::vector<Real> xs(rule.nodes);
    CHECK(abs(apply_rule(rule, 1, xs) + Real(15) / 2) <= tol_guard(18));
    std::vector<Real> sq;
    for (const Real& x : rule.nodes) sq.push_back(x * x);
    CHECK(abs(apply_rule(rule, 2, sq) - Real(1) / 2) <= tol_guard(18));
    CHECK_THROWS_AS(apply_rule(rule, 1, std::vector<Real>(N - 1, Real(0))),
                    std::invalid_argument);
}

TEST_CASE("exactness to degree 4n-1 and defect at 4n") {
    {
        QuadratureRule rule = build_rule(5, WeightSystem::symmetric_triple(Real(15)), true);
        WeightMatrix err = exactness_report(rule, 20);
        for (int d = 0; d <= 19; ++d)
            for (int j = 0; j < 3; ++j) CHECK(err(d, j) <= parse_real("1e-20"));
        Real defect(0);
        for (int j = 0; j < 3; ++j) defect = std::max(defect, err(20, j));
        CHECK(defect > parse_real("1e-6"));
    }
    {
        QuadratureRule rule = build_rule(1, WeightSystem::symmetric_triple(Real(15)), true);
        WeightMatrix err = exactness_report(rule, 3);
        for (int d = 0; d <= 3; ++d)
            for (int j = 0; j < 3; ++j) CHECK(err(d, j) <= parse_real("1e-20"));
    }
}

TEST_CASE("interval factorization rebuilds the polynomial") {
    for (int n : {1, 3, 10}) {
        QuadratureRule rule = build_rule(n, WeightSystem::symmetric_triple(Real(30)), true);
        FactoredNodes f = factor_by_intervals(rule, bounding_intervals(n, Real(30)));
        CHECK(f.left.degree() == n);
        CHECK(f.middle.degree() == n);
        CHECK(f.right.degree() == n);
        Coeffs product =
            poly_mul(poly_mul(f.left.coeffs(), f.middle.coeffs()), f.right.coeffs());
        MonicPoly h = build_by_recurrence(rule.index, rule.system);
        CHECK(mhq::testing::rel_coeff_diff(product, h.coeffs()) <= tol_guard(10));
    }
}

TEST_CASE("sign patterns in the safe regime and at the table point") {
    QuadratureRule safe = build_rule(10, WeightSystem::symmetric_triple(Real(30)), true);
    for (const SignPattern& sp : sign_pattern_check(safe)) {
        CHECK(sp.matches);
        CHECK(sp.first_violation == 0);
    }
    // the reference-table parameters show the same first-integral pattern
    auto table_patterns = sign_pattern_check(table_rule());
    CHECK(table_patterns[0].matches);
}

TEST_CASE("factorized-weight oracles") {
    for (int n : {1, 2, 3}) {
        QuadratureRule rule = build_rule(n, WeightSystem::symmetric_triple(Real(30)), true);
        FactoredNodes f = factor_by_intervals(rule, bounding_intervals(n, Real(30)));
        for (int j = 1; j <= 3; ++j)
            CHECK(gauss_factor_oracle(rule, f, j) <= tol_guard(15));
    }
}

TEST_CASE("nth-root decay profile") {
    std::vector<DecayEntry> decay = decay_profile(table_rule(), 1);
    REQUIRE(decay.size() == 20);
    CHECK(decay.front().k == 11);
    CHECK(abs(decay.front().nth_root - parse_real("0.30425")) <= parse_real("1e-3"));
    CHECK(decay.back().k == 30);
    CHECK(abs(decay.back().nth_root - parse_real("0.014403")) <= parse_real("1e-4"));
    for (const DecayEntry& e : decay) CHECK(e.nth_root < 1);
}

TEST_CASE("normalized weights are scale-invariant") {
    // recompute in the scaled picture (nodes/sqrt(n), moments of the
    // mean -chat/2, variance 1/2n densities) and compare
    int n = 4;
    Real c(10);
    WeightSystem w = WeightSystem::symmetric_triple(c);
    QuadratureRule rule = build_rule(n, w, true);
    int N = rule.node_count();
    Real root_n = sqrt(Real(n));

    MonicPoly h = build_by_recurrence(rule.index, w);
    Coeffs scaled = zero_coeffs(N + 1);
    for (int i = 0; i <= N; ++i) scaled[i] = h[i] * pow(root_n, i - N);
    MonicPoly hs(std::move(scaled));
    Coeffs dhs = poly_derivative(hs);

    for (int j = 0; j < 3; ++j) {
        MomentVector mom = gaussian_moments(w.shifts()[j], N, true);
        Coeffs scaled_mom = zero_coeffs(N);
        for (int i = 0; i < N; ++i) scaled_mom[i] = mom.m[i] / pow(root_n, i);
        MomentVector mom_s{w.shifts()[j] / root_n, true, std::move(scaled_mom)};
        for (int k = 0; k < N; ++k) {
            Real yk = rule.nodes[k] / root_n;
            auto [quot, rem] = deflate_at(hs, yk);
            Real lam = integrate_poly(quot.coeffs(), mom_s) / poly_eval(dhs, yk);
            CHECK(abs(lam - rule.weights(j, k)) <=
                  tol_guard(15) * std::max(Real(1), abs(lam)));
        }
    }
}

TEST_CASE("applying a Lagrange basis function returns its weight") {
    QuadratureRule rule = build_rule(3, WeightSystem::symmetric_triple(Real(15)), true);
    MonicPoly h = build_by_recurrence(rule.index, rule.system);
    Coeffs dh = poly_derivative(h);
    int N = rule.node_count();
    for (int k : {0, 4, N - 1}) {
        auto [quot, rem] = deflate_at(h, rule.nodes[k]);
        Real slope = poly_eval(dh, rule.nodes[k]);
        std::vector<Real> basis;
        for (const Real& x : rule.nodes) basis.push_back(poly_eval(quot, x) / slope);
        for (int j = 1; j <= 3; ++j) {
            Real lam = apply_rule(rule, j, basis);
            CHECK(abs(lam - rule.weights(j - 1, k)) <=
                  tol_guard(15) * std::max(Real(1), abs(lam)));
        }
    }
}

TEST_CASE("symmetric weight mirror identities") {
    const QuadratureRule& rule = table_rule();
    int N = rule.node_count();
    // absolute comparison: the rows sum to 1, and the entries near the far
    // tail are themselves only computable to ~P-20 digits
    for (int k = 0; k < N; ++k) {
        CHECK(abs(rule.weights(0, k) - rule.weights(2, N - 1 - k)) <= tol_guard(15));
        CHECK(abs(rule.weights(1, k) - rule.weights(1, N - 1 - k)) <= tol_guard(15));
    }
}
