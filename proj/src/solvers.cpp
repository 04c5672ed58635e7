#include "solvers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace blab {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

void validate(const PickProblem& prob) {
    if (prob.nodes.empty() || prob.nodes.size() != prob.values.size())
        throw std::invalid_argument("pick problem: node/value lists must be nonempty and equal length");
    for (cplx l : prob.nodes)
        if (!(std::abs(l) < 1.0)) throw std::invalid_argument("pick problem: nodes must lie in the open disc");
    for (size_t i = 0; i < prob.nodes.size(); ++i)
        for (size_t j = i + 1; j < prob.nodes.size(); ++j)
            if (std::abs(prob.nodes[i] - prob.nodes[j]) < 1e-10)
                throw std::invalid_argument("pick problem: nodes must be distinct");
}

bool psd(const MatrixXcd& m) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0) >= -1e-12 * m.norm();
}

}  // namespace

Eigen::MatrixXcd pick_matrix(const PickProblem& prob, double c) {
    validate(prob);
    const auto n = static_cast<Eigen::Index>(prob.nodes.size());
    MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const cplx num = c * c - std::conj(prob.values[static_cast<size_t>(i)]) * prob.values[static_cast<size_t>(j)];
            const cplx den = 1.0 - std::conj(prob.nodes[static_cast<size_t>(i)]) * prob.nodes[static_cast<size_t>(j)];
            m(i, j) = num / den;
        }
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-13 * std::max(1.0, m.cwiseAbs().maxCoeff()))
        throw std::runtime_error("pick matrix: unexpected asymmetry");
    m = ((m + m.adjoint()) / 2.0).eval();
    return m;
}

double np_value(const PickProblem& prob, double tol) {
    validate(prob);
    if (!(tol > 0.0)) throw std::invalid_argument("np_value: tolerance must be positive");
    auto feasible = [&](double c) { return psd(pick_matrix(prob, c)); };

    double lo = 0.0;
    for (cplx w : prob.values) lo = std::max(lo, std::abs(w));
    if (feasible(lo)) return lo;

    double hi = std::max({2.0 * lo, lo + 1.0, 1.0});
    int expansions = 0;
    while (!feasible(hi)) {
        hi *= 2.0;
        if (++expansions > 200) throw std::runtime_error("np_value: no feasible bound found");
    }
    int iterations = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (feasible(mid) ? hi : lo) = mid;
        if (++iterations > 200) throw std::runtime_error("np_value: bisection failed to converge");
    }
    // feasibility is an up-set in c; the bracket must still be feasible
    if (!feasible(hi)) throw std::runtime_error("np_value: feasibility lost during bisection");
    return hi;
}

double spectral_norm(const Eigen::MatrixXcd& a) {
    if (a.rows() == 1 && a.cols() == 1) return std::abs(a(0, 0));
    Eigen::JacobiSVD<MatrixXcd> svd(a);
    return svd.singularValues()(0);
}

double cs_value(const std::vector<cplx>& w) {
    if (w.empty()) throw std::invalid_argument("cs_value: empty coefficient list");
    const auto n = static_cast<Eigen::Index>(w.size());
    MatrixXcd m = MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = w[static_cast<size_t>(i - j)];
    return spectral_norm(m);
}

CompressionMatrix compression_matrix(const TaylorSeries& f, const MalmquistBasis& basis) {
    if (!f.exact) throw std::domain_error("compression: symbol must be an exact polynomial");
    const int n = static_cast<int>(basis.basis.size());
    const int df = f.trimmed_degree(0.0);
    if (basis.degree_cap < df + n)
        throw std::invalid_argument("compression: basis degree cap must cover deg(f) + n");
    TaylorSeries sym = f;
    sym.coeffs.resize(static_cast<size_t>(df) + 1);
    CompressionMatrix out;
    out.basis_degree_cap = basis.degree_cap;
    out.entries.resize(n, n);
    for (int j = 0; j < n; ++j) {
        const TaylorSeries fe = ts_multiply(sym, basis.basis[static_cast<size_t>(j)], basis.degree_cap);
        for (int i = 0; i < n; ++i)
            out.entries(i, j) = cauchy_pairing(fe, basis.basis[static_cast<size_t>(i)]);
    }
    return out;
}

double quotient_norm(const TaylorSeries& f, const NodeSet& sigma, double tol) {
    (void)tol;
    if (!f.exact) throw std::domain_error("quotient norm: symbol must be an exact polynomial");
    const int df = f.trimmed_degree(0.0);
    const int cap = std::max(default_degree_cap(sigma), df + sigma.total() + 8);
    const MalmquistBasis basis = malmquist_basis(sigma, cap);
    return spectral_norm(compression_matrix(f, basis).entries);
}

// ---------------------------------------------------------------------------
// estimators
// ---------------------------------------------------------------------------

namespace {

// radix-2 transform with explicit sign; values(k) = sum_j a_j e^{sign 2 pi i jk / M}
void fft_pow2(std::vector<cplx>& a, int sign) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0);
            for (size_t j = 0; j < len / 2; ++j) {
                const cplx u = a[i + j];
                const cplx v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

// values of each series on the uniform M-point circle grid, as rows
MatrixXcd grid_values(const std::vector<TaylorSeries>& fs, size_t m) {
    MatrixXcd out(static_cast<Eigen::Index>(fs.size()), static_cast<Eigen::Index>(m));
    parallel_for(static_cast<int>(fs.size()), [&](int i) {
        std::vector<cplx> a(m, cplx(0.0));
        const auto& c = fs[static_cast<size_t>(i)].coeffs;
        std::copy(c.begin(), c.end(), a.begin());
        fft_pow2(a, +1);
        for (size_t k = 0; k < m; ++k) out(i, static_cast<Eigen::Index>(k)) = a[k];
    });
    return out;
}

size_t quadrature_points(int degree_cap) {
    size_t m = 64;
    while (m < 2 * static_cast<size_t>(degree_cap) + 2) m <<= 1;
    return m;
}

// compressed multiplication by every u_m at once:
// T_m(i, j) = (1/M) sum_k u_m(w_k) e_j(w_k) conj(e_i(w_k))
std::vector<MatrixXcd> compression_family(const MatrixXcd& e_vals, const MatrixXcd& u_vals) {
    const Eigen::Index m = e_vals.cols();
    const MatrixXcd ec = e_vals.conjugate();
    const MatrixXcd et = e_vals.transpose();
    std::vector<MatrixXcd> out(static_cast<size_t>(u_vals.rows()));
    parallel_for(static_cast<int>(u_vals.rows()), [&](int idx) {
        const MatrixXcd v = u_vals.row(idx).transpose().asDiagonal() * et;
        out[static_cast<size_t>(idx)] = (ec * v) / static_cast<double>(m);
    });
    return out;
}

MatrixXcd assemble(const std::vector<MatrixXcd>& family, const VectorXcd& c) {
    MatrixXcd a = MatrixXcd::Zero(family.front().rows(), family.front().cols());
    for (size_t m = 0; m < family.size(); ++m) a += c(static_cast<Eigen::Index>(m)) * family[m];
    return a;
}

VectorXcd deterministic_probe(Eigen::Index n) {
    VectorXcd x(n);
    for (Eigen::Index j = 0; j < n; ++j)
        x(j) = cplx(1.0 + 0.37 * static_cast<double>(j % 7), 0.23 * static_cast<double>(j % 5) - 0.4);
    x.normalize();
    return x;
}

void top_singular_pair(const MatrixXcd& a, VectorXcd& x, VectorXcd& y, int iters) {
    for (int it = 0; it < iters; ++it) {
        VectorXcd ax = a * x;
        const double ny = ax.norm();
        if (!(ny > 0.0)) return;
        y = ax / ny;
        VectorXcd aty = a.adjoint() * y;
        const double nx = aty.norm();
        if (!(nx > 0.0)) return;
        x = aty / nx;
    }
}

struct StartOutcome {
    double value = 0.0;
    VectorXcd coords;
};

// Alternating maximization of |y^* T(c) x| over the three unit balls. Each
// block update is exact, so the bilinear value is nondecreasing; the returned
// value is the exact spectral norm at the final c.
StartOutcome hilbert_ascent(const std::vector<MatrixXcd>& family, VectorXcd c, int outer_iters) {
    const Eigen::Index n = family.front().rows();
    c.normalize();
    VectorXcd x = deterministic_probe(n);
    VectorXcd y = x;
    MatrixXcd a = assemble(family, c);
    top_singular_pair(a, x, y, 40);
    double prev = 0.0;
    for (int it = 0; it < outer_iters; ++it) {
        VectorXcd g(static_cast<Eigen::Index>(family.size()));
        for (size_t m = 0; m < family.size(); ++m) g(static_cast<Eigen::Index>(m)) = y.adjoint() * (family[m] * x);
        const double nv = g.norm();
        if (!(nv > 1e-300)) break;
        c = g.conjugate() / nv;
        a = assemble(family, c);
        top_singular_pair(a, x, y, 8);
        if (std::abs(nv - prev) <= 1e-13 * std::max(1.0, nv)) {
            prev = nv;
            break;
        }
        prev = nv;
    }
    StartOutcome out;
    out.coords = c;
    out.value = spectral_norm(assemble(family, c));
    return out;
}

EstimateResult hilbert_estimate(const NodeSet& sigma, const SpaceSpec& space, int budget, std::uint64_t seed) {
    const double alpha = space.is_hardy() ? 0.0 : space.param;
    const int n = sigma.total();
    const int cap = default_degree_cap(sigma);
    const MalmquistBasis model = malmquist_basis(sigma, cap);
    std::vector<TaylorSeries> unit_basis;
    std::string basis_label;
    if (alpha == 0.0) {
        unit_basis = model.basis;
        basis_label = "malmquist";
    } else {
        unit_basis = gram_schmidt_kernels(sigma, KernelSpec{alpha}, cap);
        basis_label = "kernel-gs";
    }
    const size_t m = quadrature_points(cap);
    const MatrixXcd e_vals = grid_values(model.basis, m);
    const MatrixXcd u_vals = (alpha == 0.0) ? e_vals : grid_values(unit_basis, m);
    const auto family = compression_family(e_vals, u_vals);

    std::vector<VectorXcd> seeds;
    // per-node kernel directions: coordinates of k_lambda are conj(u_m(lambda))
    for (const Node& nd : sigma.nodes()) {
        VectorXcd c(n);
        for (int k = 0; k < n; ++k)
            c(k) = std::conj(horner(unit_basis[static_cast<size_t>(k)], nd.lambda));
        if (c.norm() > 0.0) seeds.push_back(c.normalized());
    }
    seeds.push_back(VectorXcd::Ones(n).normalized());
    // one-point multisets: project the worst-case witness onto the kernel
    // span. The projection keeps the trace, so its quotient value survives.
    if (sigma.nodes().size() == 1 && (alpha == 0.0 || alpha == -0.5)) {
        const int order = alpha == 0.0 ? 1 : 2;
        const cplx lam = sigma.nodes().front().lambda;
        std::vector<cplx> prefix(static_cast<size_t>(cap) + 1, cplx(0.0));
        prefix[0] = 1.0;
        std::vector<cplx> comb(prefix.size(), cplx(0.0));
        const double w = std::sqrt(1.0 - std::norm(lam));
        for (int k = 0; k < n; ++k) {
            std::vector<cplx> term = prefix;
            for (auto& x : term) x *= w;
            ts_div_one_minus_inplace(term, std::conj(lam));
            for (size_t i = 0; i < comb.size(); ++i) comb[i] += term[i];
            ts_mul_linear_inplace(prefix, lam, cplx(-1.0));
            ts_div_one_minus_inplace(prefix, std::conj(lam));
        }
        TaylorSeries kernel_comb(std::move(comb), false);
        TaylorSeries witness = order == 1 ? kernel_comb : ts_multiply(kernel_comb, kernel_comb, cap);
        witness = ts_scale(witness, std::pow(static_cast<double>(n), -order / 2.0));
        VectorXcd c(n);
        for (int k = 0; k < n; ++k)
            c(k) = weighted_pairing(witness, unit_basis[static_cast<size_t>(k)], alpha);
        if (c.norm() > 0.0) seeds.push_back(c.normalized());
    }
    const int random_starts = std::clamp(budget / 200, 4, 64);
    const int total = static_cast<int>(seeds.size()) + random_starts;

    std::vector<StartOutcome> outcomes(static_cast<size_t>(total));
    parallel_for(total, [&](int s) {
        VectorXcd c0;
        if (s < static_cast<int>(seeds.size())) {
            c0 = seeds[static_cast<size_t>(s)];
        } else {
            SplitRng rng(seed, static_cast<std::uint64_t>(s));
            c0.resize(n);
            for (int k = 0; k < n; ++k) c0(k) = rng.normal_complex();
            if (!(c0.norm() > 0.0)) c0 = VectorXcd::Ones(n);
            c0.normalize();
        }
        StartOutcome best = hilbert_ascent(family, c0, 200);
        // the seed itself is a certified point; never report below it
        const double at_seed = spectral_norm(assemble(family, c0));
        if (at_seed > best.value) best = StartOutcome{at_seed, c0};
        outcomes[static_cast<size_t>(s)] = std::move(best);
    });
    int arg = 0;
    for (int s = 1; s < total; ++s)
        if (outcomes[static_cast<size_t>(s)].value > outcomes[static_cast<size_t>(arg)].value) arg = s;

    EstimateResult out;
    out.value = outcomes[static_cast<size_t>(arg)].value;
    out.basis = basis_label;
    out.route = "compression-ascent";
    out.witness.assign(outcomes[static_cast<size_t>(arg)].coords.data(),
                       outcomes[static_cast<size_t>(arg)].coords.data() + n);
    return out;
}

double hp_grid_norm(const std::vector<cplx>& coeffs, double p, int grid) {
    double acc = 0.0;
    for (int k = 0; k < grid; ++k) {
        const cplx w = std::polar(1.0, 2.0 * kPi * k / grid);
        cplx v(0.0);
        for (size_t i = coeffs.size(); i-- > 0;) v = v * w + coeffs[i];
        acc += std::pow(std::abs(v), p);
    }
    return std::pow(acc / grid, 1.0 / p);
}

EstimateResult hardy_even_estimate(const NodeSet& sigma, double p, int budget, std::uint64_t seed) {
    const int n = sigma.total();
    const int deg = std::max(2 * n, 6);
    const int cap = std::max(default_degree_cap(sigma), deg + n + 8);
    const MalmquistBasis model = malmquist_basis(sigma, cap);
    // monomial compressions; the symbol family is linear in its coefficients
    std::vector<MatrixXcd> family(static_cast<size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        std::vector<cplx> mono(static_cast<size_t>(k) + 1, cplx(0.0));
        mono.back() = 1.0;
        family[static_cast<size_t>(k)] =
            compression_matrix(TaylorSeries(std::move(mono), true), model).entries;
    }
    const int search_grid = 512;  // exact for |g|^p up to p deg < 512
    if (p * deg >= search_grid)
        throw std::invalid_argument("estimate: polynomial family too large for the exponent");
    auto objective = [&](const std::vector<cplx>& c, int grid) {
        const double nrm = hp_grid_norm(c, p, grid);
        if (!(nrm > 1e-300)) return 0.0;
        VectorXcd cv(static_cast<Eigen::Index>(c.size()));
        for (size_t i = 0; i < c.size(); ++i) cv(static_cast<Eigen::Index>(i)) = c[i];
        return spectral_norm(assemble(family, cv)) / nrm;
    };

    const int starts = std::clamp(budget / 800, 2, 16) + 1;
    const int sweeps = 80;
    std::vector<std::pair<double, std::vector<cplx>>> outcomes(static_cast<size_t>(starts));
    parallel_for(starts, [&](int s) {
        SplitRng rng(seed, 0x9000 + static_cast<std::uint64_t>(s));
        std::vector<cplx> c(static_cast<size_t>(deg) + 1, cplx(0.0));
        if (s == 0) {
            c[0] = 1.0;  // constant symbol
        } else {
            for (auto& x : c) x = rng.normal_complex();
        }
        double best = objective(c, search_grid);
        double step = 0.5;
        for (int sweep = 0; sweep < sweeps; ++sweep) {
            bool improved = false;
            for (size_t k = 0; k < c.size(); ++k) {
                for (int part = 0; part < 2; ++part) {
                    for (double dir : {+1.0, -1.0}) {
                        std::vector<cplx> trial = c;
                        trial[k] += part == 0 ? cplx(dir * step, 0.0) : cplx(0.0, dir * step);
                        const double v = objective(trial, search_grid);
                        if (v > best * (1.0 + 1e-14)) {
                            best = v;
                            c = std::move(trial);
                            improved = true;
                        }
                    }
                }
            }
            if (!improved) {
                step *= 0.5;
                if (step < 1e-4) break;
            }
        }
        outcomes[static_cast<size_t>(s)] = {objective(c, boundary_quadrature_size(deg)), std::move(c)};
    });
    int arg = 0;
    for (int s = 1; s < starts; ++s)
        if (outcomes[static_cast<size_t>(s)].first > outcomes[static_cast<size_t>(arg)].first) arg = s;

    EstimateResult out;
    out.value = outcomes[static_cast<size_t>(arg)].first;
    out.basis = "poly";
    out.route = "hp-coordinate-ascent";
    out.witness = outcomes[static_cast<size_t>(arg)].second;
    return out;
}

}  // namespace

EstimateResult c_sigma_estimate(const NodeSet& sigma, const SpaceSpec& space, int budget, std::uint64_t seed) {
    if (budget < 1) throw std::invalid_argument("estimate: budget must be >= 1");
    if (!space.is_hardy()) return hilbert_estimate(sigma, space, budget, seed);
    if (space.param == 2.0) return hilbert_estimate(sigma, space, budget, seed);
    const double half = space.param / 2.0;
    if (!std::isinf(space.param) && std::abs(half - std::round(half)) < 1e-12)
        return hardy_even_estimate(sigma, space.param, budget, seed);
    throw std::invalid_argument("estimate: supported spaces are H^2, weighted, and even Hardy exponents");
}

double carleson_estimate(const NodeSet& sigma, int budget, std::uint64_t seed) {
    if (!sigma.distinct()) throw std::invalid_argument("carleson estimate: nodes must be distinct");
    if (budget < 1) throw std::invalid_argument("carleson estimate: budget must be >= 1");
    const auto nodes = sigma.flat();
    const int n = static_cast<int>(nodes.size());
    constexpr double kTol = 1e-8;
    auto objective = [&](const std::vector<double>& theta) {
        PickProblem prob;
        prob.nodes = nodes;
        prob.values.reserve(theta.size());
        for (double t : theta) prob.values.push_back(std::polar(1.0, t));
        return np_value(prob, kTol);
    };

    const int random_starts = std::clamp(budget / 100, 2, 64);
    const int total = random_starts + 2;
    const int sweeps = std::clamp(budget / std::max(1, random_starts), 10, 100);
    std::vector<double> results(static_cast<size_t>(total), 0.0);
    parallel_for(total, [&](int s) {
        std::vector<double> theta(static_cast<size_t>(n), 0.0);
        if (s == 1)
            for (int j = 0; j < n; ++j) theta[static_cast<size_t>(j)] = kPi * j;
        if (s >= 2) {
            SplitRng rng(seed, static_cast<std::uint64_t>(s));
            for (auto& t : theta) t = 2.0 * kPi * rng.uniform();
        }
        double best = objective(theta);
        double step = kPi / 2.0;
        for (int sweep = 0; sweep < sweeps; ++sweep) {
            bool improved = false;
            for (int j = 0; j < n; ++j) {
                for (double dir : {+1.0, -1.0}) {
                    auto trial = theta;
                    trial[static_cast<size_t>(j)] += dir * step;
                    const double v = objective(trial);
                    if (v > best * (1.0 + 1e-13)) {
                        best = v;
                        theta = std::move(trial);
                        improved = true;
                    }
                }
            }
            if (!improved) {
                step *= 0.5;
                if (step < 1e-3) break;
            }
        }
        results[static_cast<size_t>(s)] = best;
    });
    double best = results[0];
    for (double v : results) best = std::max(best, v);
    return best;
}

double max_eval_functional(const NodeSet& sigma, const SpaceSpec& space) {
    double best = 0.0;
    for (const Node& nd : sigma.nodes())
        best = std::max(best, eval_functional_norm(space, std::abs(nd.lambda)));
    return best;
}

}  // namespace blab
