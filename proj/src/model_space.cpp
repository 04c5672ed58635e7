#include "model_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blab {

int default_degree_cap(int n, double r) {
    int d = std::max(256, 8 * n);
    if (r > 0.2) {
        // geometric tail r^D below 1e-22
        d = std::max(d, static_cast<int>(std::ceil(50.0 / -std::log(r))));
    }
    // clustered multiplicities push coefficient mass out to ~ n (1+r)/(1-r)
    d = std::max(d, static_cast<int>(std::ceil(2.0 * n * (1.0 + r) / (1.0 - r))) + 64);
    return std::min(d, 16384);
}

int default_degree_cap(const NodeSet& sigma) {
    return default_degree_cap(sigma.total(), sigma.radius());
}

MalmquistBasis malmquist_basis(const NodeSet& sigma, int degree_cap) {
    const auto lams = sigma.flat();
    const size_t cap = static_cast<size_t>(degree_cap) + 1;
    MalmquistBasis out{sigma, {}, degree_cap};
    out.basis.reserve(lams.size());
    std::vector<cplx> prefix(cap, cplx(0.0));
    prefix[0] = 1.0;
    for (size_t k = 0; k < lams.size(); ++k) {
        const cplx lam = lams[k];
        // e_k = prefix * sqrt(1 - |lam|^2) / (1 - conj(lam) z)
        std::vector<cplx> e = prefix;
        const double w = std::sqrt(1.0 - std::norm(lam));
        for (auto& x : e) x *= w;
        ts_div_one_minus_inplace(e, std::conj(lam));
        out.basis.emplace_back(std::move(e), false);
        // prefix *= b_lam
        ts_mul_linear_inplace(prefix, lam, cplx(-1.0));
        ts_div_one_minus_inplace(prefix, std::conj(lam));
    }
    return out;
}

TaylorSeries project_trace(const TaylorSeries& f, const MalmquistBasis& basis) {
    std::vector<cplx> g(static_cast<size_t>(basis.degree_cap) + 1, cplx(0.0));
    for (const TaylorSeries& e : basis.basis) {
        const cplx c = cauchy_pairing(f, e);
        for (size_t i = 0; i < g.size() && i < e.coeffs.size(); ++i) g[i] += c * e.coeffs[i];
    }
    return TaylorSeries(std::move(g), false);
}

TaylorSeries projected_szego_closed_form(const NodeSet& sigma, cplx z, int degree_cap) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("projected kernel: z must lie in the open disc");
    const TaylorSeries b = blaschke_series(sigma, degree_cap);
    const cplx bz = std::conj(eval_product(sigma, z));
    std::vector<cplx> c(b.coeffs.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = -bz * b.coeffs[i];
    c[0] += 1.0;
    ts_div_one_minus_inplace(c, std::conj(z));
    return TaylorSeries(std::move(c), false);
}

double projected_szego_norm(const NodeSet& sigma, cplx z) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("projected kernel: z must lie in the open disc");
    const double num = 1.0 - std::norm(eval_product(sigma, z));
    const double den = 1.0 - std::norm(z);
    return std::sqrt(num / den);
}

TaylorSeries reproducing_kernel(const KernelSpec& spec, cplx lambda, int degree_cap) {
    if (!(std::abs(lambda) < 1.0)) throw std::domain_error("kernel: point must lie in the open disc");
    std::vector<cplx> c(static_cast<size_t>(degree_cap) + 1);
    cplx pow_l(1.0);
    for (int k = 0; k <= degree_cap; ++k) {
        c[static_cast<size_t>(k)] = std::pow(k + 1.0, -2.0 * spec.alpha) * pow_l;
        pow_l *= std::conj(lambda);
    }
    return TaylorSeries(std::move(c), false);
}

TaylorSeries reproducing_kernel_derivative(const KernelSpec& spec, cplx lambda, int order, int degree_cap) {
    if (order < 0) throw std::invalid_argument("kernel derivative: order must be nonnegative");
    if (order == 0) return reproducing_kernel(spec, lambda, degree_cap);
    if (!(std::abs(lambda) < 1.0)) throw std::domain_error("kernel: point must lie in the open disc");
    std::vector<cplx> c(static_cast<size_t>(degree_cap) + 1, cplx(0.0));
    cplx pow_l(1.0);  // conj(lambda)^{k - order}
    for (int k = order; k <= degree_cap; ++k) {
        double fall = 1.0;
        for (int i = 0; i < order; ++i) fall *= static_cast<double>(k - i);
        c[static_cast<size_t>(k)] = std::pow(k + 1.0, -2.0 * spec.alpha) * fall * pow_l;
        pow_l *= std::conj(lambda);
    }
    return TaylorSeries(std::move(c), false);
}

cplx weighted_pairing(const TaylorSeries& h, const TaylorSeries& g, double alpha) {
    const size_t n = std::min(h.coeffs.size(), g.coeffs.size());
    cplx acc(0.0);
    for (size_t k = 0; k < n; ++k)
        acc += h.coeffs[k] * std::conj(g.coeffs[k]) * std::pow(static_cast<double>(k) + 1.0, 2.0 * alpha);
    return acc;
}

std::vector<TaylorSeries> gram_schmidt_kernels(const NodeSet& sigma, const KernelSpec& spec, int degree_cap) {
    std::vector<TaylorSeries> raw;
    for (const Node& nd : sigma.nodes())
        for (int i = 0; i < nd.mult; ++i)
            raw.push_back(reproducing_kernel_derivative(spec, nd.lambda, i, degree_cap));

    std::vector<TaylorSeries> basis;
    basis.reserve(raw.size());
    double first_pivot = 0.0;
    for (TaylorSeries v : raw) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const TaylorSeries& u : basis) {
                const cplx c = weighted_pairing(v, u, spec.alpha);
                for (size_t i = 0; i < v.coeffs.size(); ++i) v.coeffs[i] -= c * u.coeffs[i];
            }
        }
        const double nrm = std::sqrt(std::abs(weighted_pairing(v, v, spec.alpha)));
        if (basis.empty()) first_pivot = nrm;
        if (!(nrm > 1e-12 * first_pivot))
            throw std::runtime_error("kernel sequence numerically dependent");
        for (auto& x : v.coeffs) x /= nrm;
        basis.push_back(std::move(v));
    }
    return basis;
}

double kernel_projection_sup(const NodeSet& sigma, const KernelSpec& spec) {
    const int cap = default_degree_cap(sigma);
    const auto basis = gram_schmidt_kernels(sigma, spec, cap);
    constexpr int kRadii = 20;
    constexpr int kAngles = 512;
    std::vector<double> per_radius(kRadii, 0.0);
    parallel_for(kRadii, [&](int j) {
        const double rho = 1.0 - std::ldexp(1.0, -(j + 1));
        double best = 0.0;
        for (int a = 0; a < kAngles; ++a) {
            const cplx z = std::polar(rho, 2.0 * kPi * a / kAngles);
            double sq = 0.0;
            // ||P k_z|| = (sum_k |u_k(z)|^2)^{1/2} for any orthonormal u_k.
            for (const TaylorSeries& u : basis) sq += std::norm(horner(u, z));
            best = std::max(best, sq);
        }
        per_radius[static_cast<size_t>(j)] = best;
    });
    double best = 0.0;
    for (double v : per_radius) best = std::max(best, v);
    return std::sqrt(best);
}

}  // namespace blab
