#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bounds.hpp"
#include "solvers.hpp"
#include "support.hpp"

using namespace blab;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("ub_energy anchors") {
    CHECK(ub_energy(NodeSet({{cplx(0.0), 1}})) == doctest::Approx(1.0).epsilon(1e-12));
    for (int n : {2, 4, 8})
        CHECK(ub_energy(NodeSet({{cplx(0.0), n}})) == doctest::Approx(std::sqrt(n)).epsilon(2e-3));
}

TEST_CASE("ub_bprime anchors") {
    CHECK(ub_bprime(NodeSet({{cplx(0.0), 1}})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    for (int n : {2, 5})
        CHECK(ub_bprime(NodeSet({{cplx(0.0), n}})) == doctest::Approx(std::sqrt(2.0 * n)).epsilon(1e-12));
    CHECK(ub_bprime(NodeSet({{cplx(0.5), 1}})) == doctest::Approx(std::sqrt(2.0) * std::sqrt(3.0)).epsilon(1e-10));
}

TEST_CASE("ub_poisson and ub_simple anchors") {
    CHECK(ub_poisson(NodeSet({{cplx(0.0), 1}})) == doctest::Approx(1.0).epsilon(1e-12));
    for (int n : {3, 4})
        CHECK(ub_poisson(NodeSet({{cplx(0.0), n}})) == doctest::Approx(std::sqrt(n)).epsilon(1e-12));
    CHECK(ub_poisson(NodeSet({{cplx(0.5), 1}})) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
    for (int n : {1, 6})
        CHECK(ub_simple(NodeSet({{cplx(0.0), n}})) == doctest::Approx(std::sqrt(n)).epsilon(1e-12));
    CHECK(ub_simple(NodeSet({{cplx(0.5), 1}})) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("bound chain on random sigma") {
    SplitRng rng(51);
    for (int t = 0; t < 30; ++t) {
        const NodeSet sigma = testing::random_sigma(rng, 1 + t % 8, 0.9, true);
        CHECK(ub_energy(sigma) <= ub_bprime(sigma) + 1e-9);
        CHECK(ub_poisson(sigma) <= ub_simple(sigma) + 1e-12);
        CHECK(ub_simple(sigma) <=
              std::sqrt(2.0 * sigma.total() / (1.0 - sigma.radius())) * (1.0 + 1e-12));
    }
}

TEST_CASE("ub_cnr pinned constants") {
    CHECK(ub_cnr(SpaceSpec::hardy(2.0), 8, 0.5) == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(ub_cnr(SpaceSpec::bergman(), 8, 0.5) ==
          doctest::Approx(std::pow(10.0, 0.25) * std::sqrt(2.0) * 16.0).epsilon(1e-14));
    CHECK(ub_cnr(SpaceSpec::hardy(kInf), 5, 0.9) == doctest::Approx(1.0));
    CHECK(ub_cnr(SpaceSpec::hardy(1.0), 3, 0.5) == doctest::Approx(2.0 * 6.0).epsilon(1e-14));
    CHECK(ub_cnr(SpaceSpec::weighted(-1.0), 2, 0.0) ==
          doctest::Approx(2.0 * std::sqrt(10.0) * std::pow(2.0, 1.5)).epsilon(1e-14));
    bool heuristic = false;
    CHECK(ub_cnr(SpaceSpec::hardy(4.0), 4, 0.0, &heuristic) ==
          doctest::Approx(std::pow(2.0, 0.25) * std::pow(4.0, 0.25)).epsilon(1e-14));
    CHECK(heuristic);
    heuristic = false;
    ub_cnr(SpaceSpec::hardy(2.0), 4, 0.0, &heuristic);
    CHECK_FALSE(heuristic);
    for (const SpaceSpec& space : {SpaceSpec::hardy(2.0), SpaceSpec::hardy(1.0), SpaceSpec::bergman()}) {
        for (double r : {0.0, 0.5, 0.9}) {
            double prev = 0.0;
            for (int n = 1; n <= 64; n *= 2) {
                const double v = ub_cnr(space, n, r);
                CHECK(v >= prev);
                prev = v;
            }
        }
    }
}

TEST_CASE("bernstein constant") {
    CHECK(bernstein_alpha(2, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(bernstein_alpha(3, 0.5) == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(bernstein_cap(3, 0.5) == doctest::Approx(18.0).epsilon(1e-15));
    bool capped = false;
    CHECK(bernstein_alpha(1, 0.3, &capped) == doctest::Approx(bernstein_cap(1, 0.3)));
    CHECK(capped);
    for (int n = 2; n <= 40; ++n)
        for (double r : {0.0, 0.3, 0.6, 0.9, 0.99})
            CHECK(bernstein_alpha(n, r) <= bernstein_cap(n, r) + 1e-12);
}

TEST_CASE("bernstein empirical on random model-space elements") {
    SplitRng rng(52);
    for (int n : {2, 5, 8}) {
        for (double r : {0.0, 0.5, 0.9}) {
            const auto res = bernstein_trials(n, r, 100, rng.next_u64());
            CHECK(res.violations == 0);
            CHECK(res.max_ratio <= res.alpha);
            CHECK(res.alpha <= res.cap + 1e-12);
        }
    }
}

TEST_CASE("evaluation functional norms") {
    CHECK(eval_functional_norm(SpaceSpec::hardy(2.0), 0.0) == doctest::Approx(1.0));
    CHECK(eval_functional_norm(SpaceSpec::hardy(2.0), 0.6) == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(eval_functional_norm(SpaceSpec::bergman(), 0.6) == doctest::Approx(1.5625).epsilon(1e-14));
    // general alpha via the kernel diagonal: alpha = -1 at t has closed sum
    const double t = 0.4;
    double want = 0.0;
    for (int k = 0; k < 4000; ++k) want += std::pow(k + 1.0, 2.0) * std::pow(t, 2 * k);
    CHECK(eval_functional_norm(SpaceSpec::weighted(-1.0), t) == doctest::Approx(std::sqrt(want)).epsilon(1e-12));
    CHECK_THROWS_AS(eval_functional_norm(SpaceSpec::hardy(4.0), 0.5), std::invalid_argument);
    CHECK_THROWS_AS(eval_functional_norm(SpaceSpec::hardy(2.0), 1.0), std::domain_error);
}

TEST_CASE("lower witness: frozen small case and coefficient ranges") {
    const WitnessPair wp = lower_witness(2, 0.0, 1);
    REQUIRE(wp.poly.coeffs.size() == 3);
    CHECK(std::abs(wp.poly.coeff(0) - cplx(1.0 / std::sqrt(2.0))) <= 1e-15);
    CHECK(std::abs(wp.poly.coeff(1) - cplx(1.0 / std::sqrt(2.0))) <= 1e-15);
    CHECK(std::abs(wp.poly.coeff(2)) <= 1e-15);

    for (int n : {1, 2, 7, 16}) {
        for (double r : {0.0, 0.5, 0.9}) {
            const WitnessPair w1 = lower_witness(n, r, 1);
            const double scale = std::pow(n, -0.5) * std::pow(1.0 - r * r, -0.5);
            CHECK(std::abs(w1.poly.coeff(0) - cplx(scale)) <= 1e-14);
            for (int j = 1; j < n; ++j)
                CHECK(std::abs(w1.poly.coeff(j) - cplx(scale * (1.0 + r))) <= 1e-13);
            CHECK(std::abs(w1.poly.coeff(n) - cplx(scale * r)) <= 1e-13);
            // composed side stays within the unit ball of its space
            CHECK(space_norm(w1.composed, SpaceSpec::weighted(0.0)) <= 1.0 + 1e-8);
            const WitnessPair w2 = lower_witness(n, r, 2);
            CHECK(space_norm(w2.composed, SpaceSpec::bergman()) <= 1.0 + 1e-8);
            CHECK(w2.poly.degree_cap() == 2 * n);
        }
    }
}

TEST_CASE("composed witness norm is n after unscaling (kernel comb)") {
    // || Q_n ||_2^2 = n; Q_n = sqrt(n) * composed for order 1
    for (int n : {1, 5, 25, 100}) {
        for (double r : {0.0, 0.5, 0.9}) {
            const WitnessPair wp = lower_witness(n, r, 1);
            const double q2 = std::pow(space_norm(wp.composed, SpaceSpec::weighted(0.0)), 2) * n;
            CHECK(q2 == doctest::Approx(n).epsilon(1e-9));
        }
    }
}

TEST_CASE("partial sums against closed-form floors") {
    const auto ps = partial_sum_check(2, 0.0, 1);
    CHECK(ps.m == 1);
    CHECK(ps.sum == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));  // (1 + 1)/sqrt(2)
    CHECK(ps.ok);
    CHECK(ps.exact_checked);
    CHECK(ps.exact_ok);
    for (int n = 1; n <= 64; ++n) {
        for (double r : {0.0, 0.5, 0.9}) {
            for (int order : {1, 2}) {
                const auto res = partial_sum_check(n, r, order);
                CHECK(res.ok);
                CHECK(res.exact_checked);
                CHECK(res.exact_ok);
            }
        }
    }
}

TEST_CASE("fejer lower estimate: constant case and witness domination") {
    CHECK(fejer_lower_estimate(TaylorSeries::polynomial({cplx(1.0)}), 1) == doctest::Approx(0.75).epsilon(1e-12));
    for (int n : {2, 3, 8, 17}) {
        for (double r : {0.0, 0.5, 0.9}) {
            const WitnessPair wp = lower_witness(n, r, 1);
            const auto ps = partial_sum_check(n, r, 1);
            const double fe = fejer_lower_estimate(wp.poly, n);
            CHECK(fe >= 0.5 * ps.sum - 1e-12);
            CHECK(fe >= ps.floor_value - 1e-12);
        }
    }
}

TEST_CASE("lb_closed pinned values") {
    CHECK(lb_closed(SpaceSpec::hardy(2.0), 32, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lb_closed(SpaceSpec::bergman(), 32, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lb_closed(SpaceSpec::hardy(4.0), 32, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(lb_closed(SpaceSpec::hardy(3.0), 4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lb_closed(SpaceSpec::hardy(kInf), 4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(lb_closed(SpaceSpec::weighted(-1.0), 4, 0.0), std::invalid_argument);
}

TEST_CASE("outer power witness") {
    const TaylorSeries one = outer_power_witness(TaylorSeries::polynomial({cplx(1.0)}), 4.0, 2.0, 8);
    CHECK(std::abs(one.coeff(0) - cplx(1.0)) <= 1e-14);
    for (int k = 1; k <= 8; ++k) CHECK(std::abs(one.coeff(k)) <= 1e-14);

    const TaylorSeries f = TaylorSeries::polynomial({cplx(1.0), cplx(0.5)});
    const int cap = 64;
    const TaylorSeries big = outer_power_witness(f, 4.0, 2.0, cap);
    // ||F||_4^4 = ||f||_2^2
    TaylorSeries trimmed = big;
    trimmed.exact = true;  // tail below 1e-16 at this cap; treated as the polynomial it is
    const double lhs = std::pow(space_norm(trimmed, SpaceSpec::hardy(4.0)), 4.0);
    const double rhs = std::pow(space_norm(f, SpaceSpec::hardy(2.0)), 2.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
    // F^2 recovers f through the cap
    const TaylorSeries sq = ts_multiply(big, big, cap);
    for (int k = 0; k + 1 <= cap - 1; ++k) CHECK(std::abs(sq.coeff(k) - f.coeff(k)) <= 1e-9);
    CHECK_THROWS_AS(outer_power_witness(f, 3.0, 2.0, 8), std::invalid_argument);
}

TEST_CASE("growth factor: limit form anchors and basis domination") {
    bool limit = false;
    CHECK(c1_growth_factor(1, 0.0, &limit) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(limit);
    for (int n : {2, 4, 9})
        CHECK(c1_growth_factor(n, 0.0) ==
              doctest::Approx(std::sqrt(2.0) * std::pow(3.0, (n - 1) / 2.0)).epsilon(1e-13));

    SplitRng rng(53);
    int checked = 0;
    for (int t = 0; t < 50; ++t) {
        const NodeSet sigma = testing::random_sigma(rng, 1 + t % 6, 0.8, true);
        const double r = sigma.radius();
        const int n = sigma.total();
        const double rho = 2.0 / (1.0 + r);
        const auto basis = malmquist_basis(sigma, default_degree_cap(sigma));
        double worst = 0.0;
        for (const TaylorSeries& e : basis.basis)
            for (int a = 0; a < 2048; ++a)
                worst = std::max(worst, std::abs(horner(e, std::polar(rho, 2.0 * kPi * a / 2048))));
        CHECK(worst <= c1_growth_factor(n, r));
        ++checked;
    }
    CHECK(checked == 50);
}
