#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace blab {

namespace {

constexpr int kAngleGrid = 4096;
constexpr int kRadialLadder = 20;

cplx circle_point(int k, int m, double rho = 1.0) {
    return std::polar(rho, 2.0 * kPi * k / m);
}

}  // namespace

double ub_energy(const NodeSet& sigma) {
    std::vector<double> per_radius(kRadialLadder, 0.0);
    parallel_for(kRadialLadder, [&](int j) {
        const double rho = 1.0 - std::ldexp(1.0, -(j + 1));
        double best = 0.0;
        for (int a = 0; a < kAngleGrid; ++a) {
            const cplx z = circle_point(a, kAngleGrid, rho);
            const double v = (1.0 - std::norm(eval_product(sigma, z))) / (1.0 - std::norm(z));
            best = std::max(best, v);
        }
        per_radius[static_cast<size_t>(j)] = best;
    });
    double best = 0.0;
    for (double v : per_radius) best = std::max(best, v);
    return std::sqrt(best);
}

double ub_bprime(const NodeSet& sigma) {
    const BlaschkeProduct b{sigma};
    double best = 0.0;
    for (int a = 0; a < kAngleGrid; ++a)
        best = std::max(best, std::abs(boundary_derivative(b, circle_point(a, kAngleGrid))));
    return std::sqrt(2.0 * best);
}

double ub_poisson(const NodeSet& sigma) {
    const auto lams = sigma.flat();
    double best = 0.0;
    for (int a = 0; a < kAngleGrid; ++a) {
        const cplx w = circle_point(a, kAngleGrid);
        double acc = 0.0;
        for (cplx lam : lams) acc += (1.0 - std::norm(lam)) / std::norm(w - lam);
        best = std::max(best, acc);
    }
    return std::sqrt(best);
}

double ub_simple(const NodeSet& sigma) {
    double acc = 0.0;
    for (cplx lam : sigma.flat()) {
        const double a = std::abs(lam);
        acc += (1.0 + a) / (1.0 - a);
    }
    return std::sqrt(acc);
}

double ub_cnr(const SpaceSpec& space, int n, double r, bool* heuristic) {
    if (n < 1 || !(r >= 0.0 && r < 1.0)) throw std::invalid_argument("ub_cnr: need n >= 1 and r in [0,1)");
    if (heuristic) *heuristic = false;
    const double ratio = n / (1.0 - r);
    if (space.is_hardy()) {
        const double p = space.param;
        if (std::isinf(p)) return 1.0;
        if (p != 1.0 && p != 2.0 && heuristic) *heuristic = true;
        return std::pow(2.0, 1.0 / p) * std::pow(ratio, 1.0 / p);
    }
    const double alpha = space.param;
    if (alpha == 0.0) return std::sqrt(2.0) * std::sqrt(ratio);
    if (alpha == -0.5) return std::pow(10.0, 0.25) * std::sqrt(2.0) * ratio;
    if (alpha == -1.0) return 2.0 * std::sqrt(10.0) * std::pow(ratio, 1.5);
    const double theta = -alpha;
    const double a = std::pow(std::sqrt(2.0), 1.0 - theta) * std::pow(2.0 * std::sqrt(10.0), theta);
    if (heuristic) *heuristic = true;
    return a * std::pow(ratio, 0.5 + theta);
}

double bernstein_cap(int n, double r) {
    if (n < 1 || !(r >= 0.0 && r < 1.0)) throw std::invalid_argument("bernstein: need n >= 1 and r in [0,1)");
    return 3.0 * n / (1.0 - r);
}

double bernstein_alpha(int n, double r, bool* capped) {
    if (capped) *capped = false;
    if (n < 2) {
        if (capped) *capped = true;
        return bernstein_cap(n, r);
    }
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("bernstein: need r in [0,1)");
    return (1.0 + (1.0 + r) * (n - 1) + std::sqrt(static_cast<double>(n - 2))) / (1.0 - r);
}

BernsteinTrialResult bernstein_trials(int n, double r, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("bernstein trials: need at least one trial");
    BernsteinTrialResult out;
    out.alpha = bernstein_alpha(n, r);
    out.cap = bernstein_cap(n, r);
    out.trials = trials;
    const int groups = (r == 0.0 || n == 1) ? 1 : std::min(8, trials);
    std::vector<double> group_max(static_cast<size_t>(groups), 0.0);
    parallel_for(groups, [&](int g) {
        SplitRng rng(seed, static_cast<std::uint64_t>(g));
        std::vector<Node> nodes;
        if (r == 0.0) {
            nodes.push_back({cplx(0.0), n});
        } else {
            // worst modulus realized exactly; remaining nodes uniform below it
            nodes.push_back({std::polar(r, 2.0 * kPi * rng.uniform()), 1});
            for (int i = 1; i < n; ++i)
                nodes.push_back({std::polar(r * std::sqrt(rng.uniform()), 2.0 * kPi * rng.uniform()), 1});
        }
        const NodeSet sigma(std::move(nodes));
        const auto basis = malmquist_basis(sigma, default_degree_cap(sigma));
        const int local = trials / groups + (g < trials % groups ? 1 : 0);
        double best = 0.0;
        for (int t = 0; t < local; ++t) {
            std::vector<cplx> c(static_cast<size_t>(n));
            for (auto& x : c) x = rng.normal_complex();
            TaylorSeries f = TaylorSeries::zero(basis.degree_cap);
            f.exact = false;
            for (int k = 0; k < n; ++k)
                for (size_t i = 0; i < f.coeffs.size(); ++i)
                    f.coeffs[i] += c[static_cast<size_t>(k)] * basis.basis[static_cast<size_t>(k)].coeffs[i];
            const double nf = space_norm(f, SpaceSpec::weighted(0.0));
            const double nd = space_norm(derivative(f), SpaceSpec::weighted(0.0));
            best = std::max(best, nd / nf);
        }
        group_max[static_cast<size_t>(g)] = best;
    });
    for (double v : group_max) out.max_ratio = std::max(out.max_ratio, v);
    if (out.max_ratio > out.alpha) out.violations = 1;
    return out;
}

double eval_functional_norm(const SpaceSpec& space, double t) {
    if (!(t >= 0.0 && t < 1.0)) throw std::domain_error("evaluation functional: t must lie in [0,1)");
    double alpha;
    if (space.is_hardy()) {
        if (space.param != 2.0)
            throw std::invalid_argument("evaluation functional: no closed form adopted for Hardy p != 2");
        alpha = 0.0;
    } else {
        alpha = space.param;
    }
    if (alpha == 0.0) return 1.0 / std::sqrt(1.0 - t * t);
    if (alpha == -0.5) return 1.0 / (1.0 - t * t);
    // kernel diagonal sum_{k} (k+1)^{-2 alpha} t^{2k}
    double acc = 0.0;
    double pw = 1.0;
    const double t2 = t * t;
    for (int k = 0;; ++k) {
        const double term = std::pow(k + 1.0, -2.0 * alpha) * pw;
        acc += term;
        pw *= t2;
        if (term < 1e-17 * acc && k > 8) break;
        if (k > 2000000) break;
    }
    return std::sqrt(acc);
}

namespace {

// 1 + (1+r) (z + ... + z^{n-1}) + r z^n, the composed Dirichlet-type profile.
std::vector<double> psi1_coeffs(int n, double r) {
    std::vector<double> c(static_cast<size_t>(n) + 1, 1.0 + r);
    c[0] = 1.0;
    c[static_cast<size_t>(n)] = r;
    return c;
}

TaylorSeries witness_poly(int n, double r, int order) {
    if (n < 1) throw std::invalid_argument("lower witness: need n >= 1");
    if (order != 1 && order != 2) throw std::invalid_argument("lower witness: order must be 1 or 2");
    if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("lower witness: need r in [0,1)");
    const double b = std::pow(static_cast<double>(n), -order / 2.0);
    const double scale = b * std::pow(1.0 - r * r, -order / 2.0);
    const auto c1 = psi1_coeffs(n, r);
    TaylorSeries psi1(std::vector<cplx>(c1.begin(), c1.end()), true);
    TaylorSeries poly = order == 1 ? psi1 : ts_multiply(psi1, psi1);
    return ts_scale(poly, scale);
}

}  // namespace

WitnessPair lower_witness(int n, double r, int order) {
    const double b = std::pow(static_cast<double>(n), -order / 2.0);
    TaylorSeries poly = witness_poly(n, r, order);

    // uncomposed side: Psi = b (Q_n)^order with Q_n the node-kernel comb at
    // lambda = -r; the weighted norm must stay within the unit ball.
    const cplx lam(-r, 0.0);
    const int cap = default_degree_cap(n, r);
    std::vector<cplx> prefix(static_cast<size_t>(cap) + 1, cplx(0.0));
    prefix[0] = 1.0;
    std::vector<cplx> q(prefix.size(), cplx(0.0));
    const double w = std::sqrt(1.0 - r * r);
    for (int k = 0; k < n; ++k) {
        std::vector<cplx> term = prefix;
        for (auto& x : term) x *= w;
        ts_div_one_minus_inplace(term, std::conj(lam));
        for (size_t i = 0; i < q.size(); ++i) q[i] += term[i];
        ts_mul_linear_inplace(prefix, lam, cplx(-1.0));
        ts_div_one_minus_inplace(prefix, std::conj(lam));
    }
    TaylorSeries qn(std::move(q), false);
    TaylorSeries composed = order == 1 ? qn : ts_multiply(qn, qn, cap);
    composed = ts_scale(composed, b);
    const double phi_alpha = (1.0 - order) / 2.0;
    const double norm = space_norm(composed, SpaceSpec::weighted(phi_alpha));
    if (!(norm <= 1.0 + 1e-8))
        throw std::runtime_error("lower witness: composed norm exceeds the unit ball");

    WitnessPair out;
    out.composed = std::move(composed);
    out.poly = std::move(poly);
    out.n = n;
    out.r = r;
    out.power = order;
    return out;
}

PartialSumCheck partial_sum_check(int n, double r, int order) {
    PartialSumCheck out;
    out.m = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    const TaylorSeries poly = witness_poly(n, r, order);
    double acc = 0.0;
    for (int j = 0; j <= std::min(out.m, poly.degree_cap()); ++j) acc += poly.coeff(j).real();
    out.sum = acc;
    out.floor_value = order == 1 ? std::sqrt(n / (1.0 - r)) / (2.0 * std::sqrt(2.0))
                                 : n / (16.0 * (1.0 - r));
    out.ok = out.sum >= out.floor_value - 1e-12 * std::max(1.0, out.floor_value);

    // exact integer route for psi1 when 10 r is integral: coefficients of
    // 10 psi1 are integers, so the combinatorial floors are exact.
    const double tenr = 10.0 * r;
    if (std::abs(tenr - std::round(tenr)) < 1e-12) {
        out.exact_checked = true;
        const std::int64_t ir = static_cast<std::int64_t>(std::llround(tenr));
        std::vector<std::int64_t> c(static_cast<size_t>(n) + 1, 10 + ir);
        c[0] = 10;
        c[static_cast<size_t>(n)] = ir;
        if (order == 1) {
            std::int64_t s = 0;
            for (int j = 0; j <= std::min<int>(out.m, n); ++j) s += c[static_cast<size_t>(j)];
            out.exact_ok = 2 * s >= 10LL * n;  // sum(psi1) >= n/2
        } else {
            std::vector<std::int64_t> sq(2 * static_cast<size_t>(n) + 1, 0);
            for (size_t i = 0; i < c.size(); ++i)
                for (size_t j = 0; j < c.size(); ++j) sq[i + j] += c[i] * c[j];
            std::int64_t s = 0;
            for (int j = 0; j <= std::min<int>(out.m, 2 * n); ++j) s += sq[static_cast<size_t>(j)];
            out.exact_ok = 8 * s >= 100LL * n * n;  // sum(psi1^2) >= n^2/8
        }
    }
    return out;
}

double fejer_lower_estimate(const TaylorSeries& psi, int n) {
    if (!psi.exact) throw std::domain_error("fejer estimate: witness must be an exact polynomial");
    for (const cplx& c : psi.coeffs)
        if (c.real() < -1e-12 || std::abs(c.imag()) > 1e-12)
            throw std::domain_error("fejer estimate: witness must have nonnegative real coefficients");
    const TaylorSeries mult = fejer_multiplier(n);
    const TaylorSeries h = multiplier_apply(psi, mult);
    double best = 0.0;
    for (int a = 0; a < kAngleGrid; ++a)
        best = std::max(best, std::abs(horner(h, circle_point(a, kAngleGrid))));
    const double value = 0.5 * best;
    const int m = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    double partial = 0.0;
    for (int j = 0; j <= std::min(m, psi.degree_cap()); ++j) partial += psi.coeff(j).real();
    if (value < 0.5 * partial - 1e-9 * std::max(1.0, partial))
        throw std::runtime_error("fejer estimate fell below the partial-sum floor");
    return value;
}

double lb_closed(const SpaceSpec& space, int n, double lam_abs) {
    if (n < 1 || !(lam_abs >= 0.0 && lam_abs < 1.0))
        throw std::invalid_argument("lb_closed: need n >= 1 and |lambda| in [0,1)");
    const double ratio = n / (1.0 - lam_abs);
    if (space.is_hardy()) {
        const double p = space.param;
        const double half = p / 2.0;
        if (std::isinf(p) || std::abs(half - std::round(half)) > 1e-12 || p < 2.0)
            throw std::invalid_argument("lb_closed: proved only for even Hardy exponents");
        return std::pow(32.0, -1.0 / p) * std::pow(ratio, 1.0 / p);
    }
    if (space.param == -0.5) return ratio / 32.0;
    throw std::invalid_argument("lb_closed: weighted case proved only for the Bergman space");
}

TaylorSeries outer_power_witness(const TaylorSeries& f, double p, double q, int degree_cap) {
    if (!(p > 0.0 && q > 0.0)) throw std::invalid_argument("outer power witness: need p, q > 0");
    const double k = p / q;
    if (std::abs(k - std::round(k)) > 1e-9 || k < 1.0)
        throw std::invalid_argument("outer power witness: p/q must be a positive integer");
    return zero_free_power(f, q / p, degree_cap);
}

double c1_growth_factor(int n, double r, bool* limit_form) {
    if (n < 1 || !(r >= 0.0 && r < 1.0)) throw std::invalid_argument("growth factor: need n >= 1, r in [0,1)");
    if (limit_form) *limit_form = r < 0.05;
    const double pref = 1.0 / (1.0 - 2.0 * r / (r + 1.0));
    // singular (1/r^2 - 1) of the display read in its limit form (1 - r^2)
    const double inner = 1.0 + 2.0 * (1.0 - r * r) / (1.0 - r * r * 4.0 / ((r + 1.0) * (r + 1.0)));
    return pref * std::sqrt(2.0 * std::pow(inner, n - 1));
}

}  // namespace blab
