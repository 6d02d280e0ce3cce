#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mhq/hermite.hpp"
#include "mhq/mhermite.hpp"
#include "test_support.hpp"

using namespace mhq;
using mhq::testing::random_real;
using mhq::testing::rel_coeff_diff;

namespace {
const WeightSystem& triple15() {
    static const WeightSystem w = WeightSystem::symmetric_triple(Real(15));
    return w;
}
}  // namespace

TEST_CASE("weight system validity") {
    CHECK_THROWS_AS(WeightSystem({Real(1), Real(1)}), std::invalid_argument);
    CHECK(triple15().symmetric());
    CHECK_FALSE(WeightSystem({Real(-1), Real(0), Real(2)}).symmetric());
    CHECK_THROWS_AS(MultiIndex({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(build_by_recurrence(MultiIndex({1, 1}), triple15()),
                    std::invalid_argument);
}

TEST_CASE("one recurrence step gives x - c_1/2") {
    MonicPoly h = build_by_recurrence(MultiIndex({1, 0, 0}), triple15());
    CHECK(h.degree() == 1);
    CHECK(abs(h[0] - Real(15) / 2) <= tol_guard(10));
}

TEST_CASE("two steps match the hand formula") {
    Real c1(3), c2(-7);
    MonicPoly h = build_by_recurrence(MultiIndex({1, 1}), WeightSystem({c1, c2}));
    // (x - c2/2)(x - c1/2) - 1/2
    CHECK(abs(h[0] - (c1 * c2 / 4 - Real(1) / 2)) <= tol_guard(10));
    CHECK(abs(h[1] + (c1 + c2) / 2) <= tol_guard(10));
}

TEST_CASE("r=1, c=0 reduces to scaled classical Hermite") {
    auto table = hermite_coefficient_table(12);
    for (int m = 1; m <= 12; ++m) {
        MonicPoly h = build_by_recurrence(MultiIndex({m}), WeightSystem({Real(0)}));
        Real scale = pow(Real(2), -m);
        for (int i = 0; i <= m; ++i) {
            Real want = Real(table[m][i]) * scale;
            CHECK(abs(h[i] - want) <= tol_guard(10) * (1 + abs(want)));
        }
    }
}

TEST_CASE("explicit construction examples") {
    MonicPoly empty = build_explicit(MultiIndex({0, 0, 0}), triple15());
    CHECK(empty.degree() == 0);
    CHECK(empty[0] == 1);

    MonicPoly h = build_explicit(MultiIndex({1, 0, 0}), triple15());
    CHECK(abs(h[0] - Real(15) / 2) <= tol_guard(10));
}

TEST_CASE("construction methods agree on (2,2,2)") {
    MonicPoly a = build_by_recurrence(MultiIndex({2, 2, 2}), triple15());
    MonicPoly b = build_explicit(MultiIndex({2, 2, 2}), triple15());
    CHECK(rel_coeff_diff(a.coeffs(), b.coeffs()) <= tol_guard(10));
}

TEST_CASE("construction methods agree on random systems") {
    for (int trial = 0; trial < 20; ++trial) {
        int r = 1 + trial % 4;
        std::vector<int> parts(r, 0);
        int budget = 3 + trial % 10;  // |n| <= 12
        for (int i = 0; i < budget; ++i) parts[i % r]++;
        std::vector<Real> shifts;
        while (static_cast<int>(shifts.size()) < r) {
            Real c = random_real(-20, 20);
            bool dup = false;
            for (const Real& s : shifts) dup = dup || abs(s - c) < Real(1) / 100;
            if (!dup) shifts.push_back(c);
        }
        MultiIndex n(parts);
        WeightSystem w(shifts);
        MonicPoly a = build_by_recurrence(n, w);
        MonicPoly b = build_explicit(n, w);
        CHECK(rel_coeff_diff(a.coeffs(), b.coeffs()) <= tol_guard(10));
    }
}

TEST_CASE("path independence of the recurrence table") {
    MultiIndex n({2, 2, 2});
    MonicPoly a = build_by_recurrence(n, triple15(), StepOrder::kRoundRobin);
    MonicPoly b = build_by_recurrence(n, triple15(), StepOrder::kBlock);
    CHECK(rel_coeff_diff(a.coeffs(), b.coeffs()) <= tol_guard(10));
}

TEST_CASE("symmetric diagonal polynomials have definite parity") {
    for (int n : {1, 2, 3, 4}) {
        MonicPoly h = build_by_recurrence(MultiIndex({n, n, n}), triple15());
        Real scale = h.coeff_scale();
        for (int i = 0; i <= h.degree(); ++i)
            if ((h.degree() - i) % 2 == 1) CHECK(abs(h[i]) <= tol_guard(10) * scale);
    }
}

TEST_CASE("orthogonality witness") {
    MultiIndex n({3, 2, 1});
    WeightSystem w({Real(-5), Real(0), Real(5)});
    MonicPoly h = build_by_recurrence(n, w);
    for (int j = 1; j <= 3; ++j) {
        MomentVector mom = gaussian_moments(w.shifts()[j - 1], h.degree() + n.parts[j - 1],
                                            false);
        for (int k = 0; k < n.parts[j - 1]; ++k) {
            Real value = orthogonality_integral(h, k, j, w);
            Real scale(0);
            for (int i = 0; i <= h.degree(); ++i) scale += abs(h[i] * mom.m[i + k]);
            CHECK(abs(value) <= tol_guard(15) * scale);
        }
    }
}

TEST_CASE("lowering identity") {
    CHECK(lowering_residual(MultiIndex({1, 0, 0}), triple15()) <= tol_guard(8));
    CHECK(lowering_residual(MultiIndex({1, 1, 1}), triple15()) <= tol_guard(8));
    WeightSystem w5({Real(-5), Real(0), Real(5)});
    CHECK(lowering_residual(MultiIndex({3, 2, 1}), w5) <= tol_guard(8));
}

TEST_CASE("raising identity") {
    CHECK(raising_residual(1, MultiIndex({1, 0, 0}), triple15()) <= tol_guard(8));
    WeightSystem w5({Real(-5), Real(0), Real(5)});
    CHECK(raising_residual(2, MultiIndex({2, 1, 0}), w5) <= tol_guard(8));
    CHECK(raising_residual(3, MultiIndex({1, 1, 1}), triple15()) <= tol_guard(8));
    CHECK_THROWS_AS(raising_residual(3, MultiIndex({1, 1, 0}), triple15()),
                    std::invalid_argument);
}

TEST_CASE("fourth-order differential equation") {
    CHECK(ode_residual(1, triple15(), {Real(0), Real(1), Real(15) / 2}) <= tol_guard(12));
    std::vector<Real> xs;
    for (int i = 0; i < 20; ++i) xs.push_back(Real(-12) + Real(24) * i / 19);
    CHECK(ode_residual(3, triple15(), xs) <= tol_guard(12));
    CHECK(ode_residual(2, WeightSystem::symmetric_triple(Real(5)), {Real(0)}) <=
          tol_guard(12));
    CHECK_THROWS_AS(ode_residual(1, WeightSystem({Real(-1), Real(0), Real(2)}), {Real(0)}),
                    std::invalid_argument);
}
