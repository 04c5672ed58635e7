#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "solvers.hpp"
#include "support.hpp"

using namespace blab;

namespace {

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

TaylorSeries poly(std::initializer_list<cplx> c) { return TaylorSeries::polynomial(std::vector<cplx>(c)); }

double circle_sup(const TaylorSeries& f) {
    double best = 0.0;
    for (int a = 0; a < 4096; ++a) best = std::max(best, std::abs(horner(f, std::polar(1.0, 2.0 * kPi * a / 4096))));
    return best;
}

}  // namespace

TEST_CASE("pick matrix: one node and zero data") {
    PickProblem one{{cplx(0.5)}, {cplx(0.8)}};
    const auto m = pick_matrix(one, 1.0);
    CHECK(m(0, 0).real() == doctest::Approx((1.0 - 0.64) / (1.0 - 0.25)).epsilon(1e-14));

    SplitRng rng(61);
    for (int t = 0; t < 20; ++t) {
        const NodeSet sigma = testing::random_distinct_sigma(rng, 2 + t % 5, 0.8);
        PickProblem zero{sigma.flat(), std::vector<cplx>(sigma.flat().size(), cplx(0.0))};
        for (double c : {0.0, 0.3, 2.0}) {
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pick_matrix(zero, c), Eigen::EigenvaluesOnly);
            CHECK(es.eigenvalues()(0) >= -1e-12);
        }
        // Hermitian by construction
        PickProblem datafull{sigma.flat(), {}};
        for (size_t i = 0; i < sigma.flat().size(); ++i) datafull.values.push_back(rng.normal_complex());
        const auto mm = pick_matrix(datafull, 1.5);
        CHECK((mm - mm.adjoint()).cwiseAbs().maxCoeff() <= 1e-13);
    }
}

TEST_CASE("np_value anchors") {
    PickProblem one{{cplx(0.5)}, {cplx(0.8)}};
    CHECK(np_value(one, 1e-10) == doctest::Approx(0.8).epsilon(1e-9));

    SplitRng rng(62);
    for (int t = 0; t < 10; ++t) {
        const NodeSet sigma = testing::random_distinct_sigma(rng, 2 + t % 4, 0.7);
        const cplx k = rng.normal_complex();
        PickProblem constant{sigma.flat(), std::vector<cplx>(sigma.flat().size(), k)};
        CHECK(np_value(constant, 1e-9) == doctest::Approx(std::abs(k)).epsilon(1e-7));
    }
    PickProblem repeated{{cplx(0.1), cplx(0.1)}, {cplx(0.0), cplx(0.0)}};
    CHECK_THROWS_AS(np_value(repeated, 1e-8), std::invalid_argument);
}

TEST_CASE("cs_value anchors") {
    CHECK(cs_value({cplx(3.0, -4.0)}) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(cs_value({cplx(1.0), cplx(1.0)}) == doctest::Approx(kGolden).epsilon(1e-12));
    CHECK(cs_value({cplx(0.0), cplx(1.0)}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("compression matrix: signed toeplitz shape and constants") {
    const NodeSet two({{cplx(0.0), 2}});
    const auto basis = malmquist_basis(two, 64);
    const auto m = compression_matrix(poly({1.0, 1.0}), basis).entries;
    CHECK(std::abs(m(0, 0) - cplx(1.0)) <= 1e-12);
    CHECK(std::abs(m(0, 1)) <= 1e-12);
    CHECK(std::abs(m(1, 0) - cplx(-1.0)) <= 1e-12);
    CHECK(std::abs(m(1, 1) - cplx(1.0)) <= 1e-12);
    CHECK(spectral_norm(m) == doctest::Approx(kGolden).epsilon(1e-12));

    SplitRng rng(63);
    const NodeSet sigma = testing::random_sigma(rng, 4, 0.8, true);
    const auto b2 = malmquist_basis(sigma, default_degree_cap(sigma));
    const cplx k = rng.normal_complex();
    const auto ck = compression_matrix(TaylorSeries::polynomial({k}), b2).entries;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(ck(i, j) - (i == j ? k : cplx(0.0))) <= 1e-10);

    // symbols in B_sigma H^2 are annihilated
    const TaylorSeries bs = blaschke_series(sigma, 24);
    TaylorSeries bpoly = bs;
    bpoly.exact = true;  // numerically a polynomial to 1e-16 at this radius? keep modest degree
    const auto mb = compression_matrix(ts_multiply(bpoly, poly({0.7, cplx(0.0, -0.4)}), 26), b2).entries;
    CHECK(mb.cwiseAbs().maxCoeff() <= 1e-6);
}

TEST_CASE("quotient norm: schur anchor and vanishing symbols") {
    const NodeSet two({{cplx(0.0), 2}});
    CHECK(quotient_norm(poly({1.0, 1.0}), two) == doctest::Approx(kGolden).epsilon(1e-10));

    SplitRng rng(64);
    for (int n : {1, 3, 6}) {
        const NodeSet rep({{cplx(0.0), n}});
        const TaylorSeries f = TaylorSeries::polynomial(testing::random_poly_coeffs(rng, n + 3));
        std::vector<cplx> head(f.coeffs.begin(), f.coeffs.begin() + n);
        CHECK(quotient_norm(f, rep) == doctest::Approx(cs_value(head)).epsilon(1e-10));
    }

    // f vanishing on sigma with multiplicities has zero quotient norm
    const NodeSet sigma({{cplx(0.3, 0.2), 2}, {cplx(-0.4), 1}});
    TaylorSeries f = poly({1.0, cplx(0.2, 0.1)});
    for (const Node& nd : sigma.nodes())
        for (int i = 0; i < nd.mult; ++i)
            f = ts_multiply(f, poly({-nd.lambda, 1.0}));
    CHECK(quotient_norm(f, sigma) <= 1e-10 * circle_sup(f));
}

TEST_CASE("quotient norm: pick route agreement") {
    const NodeSet sigma({{cplx(0.4), 1}, {cplx(-0.2), 1}});
    const double qn = quotient_norm(poly({0.0, 1.0}), sigma);
    PickProblem prob{sigma.flat(), {cplx(0.4), cplx(-0.2)}};
    CHECK(qn == doctest::Approx(np_value(prob, 1e-8)).epsilon(1e-6));

    SplitRng rng(65);
    for (int t = 0; t < 50; ++t) {
        const NodeSet s = testing::random_distinct_sigma(rng, 2 + t % 7, 0.8);
        const TaylorSeries f = TaylorSeries::polynomial(testing::random_poly_coeffs(rng, 2 + t % 5));
        PickProblem p{s.flat(), {}};
        for (cplx lam : s.flat()) p.values.push_back(horner(f, lam));
        const double a = quotient_norm(f, s);
        const double b = np_value(p, 1e-8);
        CHECK(std::abs(a - b) <= 1e-6 * std::max(1.0, b));
    }
}

TEST_CASE("quotient norm: homogeneity, monotonicity, contractivity") {
    SplitRng rng(66);
    for (int t = 0; t < 20; ++t) {
        const NodeSet sigma = testing::random_sigma(rng, 2 + t % 5, 0.85, true);
        const TaylorSeries f = TaylorSeries::polynomial(testing::random_poly_coeffs(rng, 6));
        const double q = quotient_norm(f, sigma);
        const cplx c = rng.normal_complex();
        CHECK(quotient_norm(ts_scale(f, c), sigma) == doctest::Approx(std::abs(c) * q).epsilon(1e-10));
        CHECK(q <= circle_sup(f) + 1e-8);
        // enlarge the multiset by one node
        auto nodes = sigma.nodes();
        nodes.push_back({std::polar(0.5, 2.0 * kPi * rng.uniform()), 1});
        CHECK(q <= quotient_norm(f, NodeSet(nodes)) + 1e-9);
    }
}

TEST_CASE("quotient norm: moebius transfer of the witness") {
    for (int n : {2, 4, 6}) {
        for (double r : {0.3, 0.6}) {
            const WitnessPair wp = lower_witness(n, r, 1);
            const double direct = quotient_norm(wp.poly, NodeSet({{cplx(0.0), n}}));
            TaylorSeries composed = wp.composed;
            composed.exact = true;  // tail far below the comparison tolerance
            const double transferred = quotient_norm(composed, NodeSet({{cplx(-r), n}}));
            CHECK(std::abs(direct - transferred) <= 1e-5 * std::max(1.0, direct));
        }
    }
}

TEST_CASE("c_sigma_estimate: single node and upper-bound discipline") {
    const auto one = c_sigma_estimate(NodeSet({{cplx(0.0), 1}}), SpaceSpec::hardy(2.0), 800, 7);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(one.basis == "malmquist");

    SplitRng rng(67);
    for (int t = 0; t < 6; ++t) {
        const NodeSet sigma = testing::random_sigma(rng, 2 + t % 4, 0.7, true);
        for (const SpaceSpec& space : {SpaceSpec::hardy(2.0), SpaceSpec::bergman()}) {
            const auto est = c_sigma_estimate(sigma, space, 800, 1000 + t);
            CHECK(est.value <= ub_cnr(space, sigma.total(), sigma.radius()) + 1e-6);
            CHECK(est.value >= max_eval_functional(sigma, space) - 1e-6);
        }
    }
}

TEST_CASE("c_sigma_estimate dominates the witness value on one-point multisets") {
    for (int n : {2, 4, 8}) {
        for (double r : {0.0, 0.5}) {
            const WitnessPair w1 = lower_witness(n, r, 1);
            const double wq1 = quotient_norm(w1.poly, NodeSet({{cplx(0.0), n}}));
            const auto est1 = c_sigma_estimate(NodeSet({{cplx(-r), n}}), SpaceSpec::hardy(2.0), 800, 21);
            CHECK(est1.value >= wq1 - 1e-9);
            const WitnessPair w2 = lower_witness(n, r, 2);
            const double wq2 = quotient_norm(w2.poly, NodeSet({{cplx(0.0), n}}));
            const auto est2 = c_sigma_estimate(NodeSet({{cplx(-r), n}}), SpaceSpec::bergman(), 800, 22);
            CHECK(est2.value >= wq2 - 1e-9);
        }
    }
}

TEST_CASE("c_sigma_estimate: determinism across thread counts") {
    const NodeSet sigma({{cplx(0.35, 0.2), 2}, {cplx(-0.5), 1}});
    setenv("BLASCHKE_LAB_THREADS", "1", 1);
    const auto a = c_sigma_estimate(sigma, SpaceSpec::hardy(2.0), 1600, 99);
    setenv("BLASCHKE_LAB_THREADS", "7", 1);
    const auto b = c_sigma_estimate(sigma, SpaceSpec::hardy(2.0), 1600, 99);
    unsetenv("BLASCHKE_LAB_THREADS");
    CHECK(a.value == b.value);
    REQUIRE(a.witness.size() == b.witness.size());
    for (size_t i = 0; i < a.witness.size(); ++i) CHECK((a.witness[i] == b.witness[i]));
}

TEST_CASE("c_sigma_estimate: even Hardy exponent") {
    const auto est = c_sigma_estimate(NodeSet({{cplx(0.0), 1}}), SpaceSpec::hardy(4.0), 800, 3);
    CHECK(est.basis == "poly");
    CHECK(est.value >= 1.0 - 1e-6);
    CHECK(est.value <= ub_cnr(SpaceSpec::hardy(4.0), 1, 0.0) + 1e-6);
    CHECK_THROWS_AS(c_sigma_estimate(NodeSet({{cplx(0.0), 1}}), SpaceSpec::hardy(3.0), 100, 1),
                    std::invalid_argument);
}

TEST_CASE("carleson estimate: anchors and merging growth") {
    CHECK(carleson_estimate(NodeSet({{cplx(0.3, -0.1), 1}}), 200, 5) == doctest::Approx(1.0).epsilon(1e-6));
    double prev = 0.0;
    for (double b : {0.9, 0.5, 0.1, 0.02}) {  // second node merging into the first
        const double v = carleson_estimate(NodeSet({{cplx(0.0), 1}, {cplx(b), 1}}), 300, 5);
        CHECK(v >= 1.0 - 1e-9);
        CHECK(v >= prev - 1e-9);
        prev = v;
    }
    CHECK_THROWS_AS(carleson_estimate(NodeSet({{cplx(0.2), 2}}), 100, 1), std::invalid_argument);
}

TEST_CASE("theorem E sandwich consistency") {
    SplitRng rng(68);
    for (int t = 0; t < 5; ++t) {
        const NodeSet sigma = testing::random_distinct_sigma(rng, 2 + t % 3, 0.6);
        const double phi = max_eval_functional(sigma, SpaceSpec::hardy(2.0));
        const auto est = c_sigma_estimate(sigma, SpaceSpec::hardy(2.0), 800, 400 + t);
        CHECK(phi <= est.value + 1e-6);
        const double ci = carleson_estimate(sigma, 400, 400 + t);
        // both sides are lower estimates; consistency only (warning-level in the CLI)
        WARN(est.value <= ci * phi + 1e-3);
    }
}
