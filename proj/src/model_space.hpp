#pragma once

#include <vector>

#include "blaschke.hpp"

namespace blab {

/// Orthonormal basis e_1..e_n of the model space K_B in the order of sigma;
/// every element is expanded to the shared degree cap.
struct MalmquistBasis {
    NodeSet sigma;
    std::vector<TaylorSeries> basis;
    int degree_cap = 0;
};

/// Shared truncation degree for a problem with n nodes of top modulus r.
/// Grows with both the geometric tail 1/(-log r) and the cluster spread
/// n (1+r)/(1-r) so that coefficient tails stay below 1e-10 targets.
int default_degree_cap(int n, double r);
int default_degree_cap(const NodeSet& sigma);

MalmquistBasis malmquist_basis(const NodeSet& sigma, int degree_cap);

/// sum_k <f, e_k> e_k with the Cauchy pairing; agrees with f on sigma with
/// multiplicities and restricts to the orthogonal projection on H^2.
TaylorSeries project_trace(const TaylorSeries& f, const MalmquistBasis& basis);

/// Expansion in zeta of (1 - conj(B(z)) B(zeta)) / (1 - conj(z) zeta).
TaylorSeries projected_szego_closed_form(const NodeSet& sigma, cplx z, int degree_cap);

/// ((1 - |B(z)|^2) / (1 - |z|^2))^{1/2}.
double projected_szego_norm(const NodeSet& sigma, cplx z);

/// Reproducing-kernel family of the weighted space with norm
/// sum |f^(k)|^2 (k+1)^{2 alpha}: the kernel at lambda has coefficients
/// (k+1)^{-2 alpha} conj(lambda)^k, so that pairing against it evaluates at
/// lambda. alpha = 0 is the Szego kernel, alpha = -1/2 the Bergman kernel
/// (1 - conj(lambda) z)^{-2}.
struct KernelSpec {
    double alpha = 0.0;
};

TaylorSeries reproducing_kernel(const KernelSpec& spec, cplx lambda, int degree_cap);

/// (d/d conj(lambda))^order applied to the kernel, taken coefficientwise.
TaylorSeries reproducing_kernel_derivative(const KernelSpec& spec, cplx lambda, int order, int degree_cap);

/// Inner product of the weighted space: sum h^(k) conj(g^(k)) (k+1)^{2 alpha}.
cplx weighted_pairing(const TaylorSeries& h, const TaylorSeries& g, double alpha);

/// Orthonormalizes the derivative-kernel sequence of sigma in the weighted
/// inner product (classical Gram-Schmidt with one reorthogonalization pass).
/// Throws when the sequence is numerically dependent at this degree cap.
std::vector<TaylorSeries> gram_schmidt_kernels(const NodeSet& sigma, const KernelSpec& spec, int degree_cap);

/// sup over a boundary-approaching grid of the weighted norm of the
/// orthogonal projection of the space's kernel at z onto the kernel span.
double kernel_projection_sup(const NodeSet& sigma, const KernelSpec& spec);

}  // namespace blab
