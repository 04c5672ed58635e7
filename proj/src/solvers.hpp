#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bounds.hpp"
#include "model_space.hpp"

namespace blab {

/// Distinct-node interpolation data for the Pick criterion.
struct PickProblem {
    std::vector<cplx> nodes;
    std::vector<cplx> values;
};

/// ((c^2 - conj(w_i) w_j) / (1 - conj(lambda_i) lambda_j))_{ij}, symmetrized;
/// positive semidefiniteness at level c solves the problem with bound c.
Eigen::MatrixXcd pick_matrix(const PickProblem& prob, double c);

/// Least c with a PSD Pick matrix, located by bisection to width tol.
/// Feasibility is monotone in c; the returned level is feasible.
double np_value(const PickProblem& prob, double tol);

/// Spectral norm of the lower-triangular Toeplitz matrix with first column w.
double cs_value(const std::vector<cplx>& w);

/// Multiply-then-project operator on K_B in the Malmquist basis:
/// entries(i, j) = <f e_j, e_i>. Its spectral norm is the quotient norm.
struct CompressionMatrix {
    Eigen::MatrixXcd entries;
    int basis_degree_cap = 0;
};

CompressionMatrix compression_matrix(const TaylorSeries& f, const MalmquistBasis& basis);

double spectral_norm(const Eigen::MatrixXcd& a);

/// ||f||_{H^inf / B H^inf} via the compressed multiplication operator.
/// tol is recorded for reporting; the matrix norm itself is exact.
double quotient_norm(const TaylorSeries& f, const NodeSet& sigma, double tol = 1e-10);

struct EstimateResult {
    double value = 0.0;
    std::vector<cplx> witness;  // coordinates in the basis named below
    std::string basis;          // malmquist | kernel-gs | poly
    std::string route;
};

/// Certified lower estimate of c(sigma, X, H^inf): multi-start ascent over
/// unit-norm elements of the kernel span (Hilbert X) or unit-ball polynomials
/// (even Hardy exponents), maximizing the quotient norm. Deterministic given
/// (inputs, seed) on any thread count.
EstimateResult c_sigma_estimate(const NodeSet& sigma, const SpaceSpec& space, int budget, std::uint64_t seed);

/// Lower estimate of the Carleson constant: phase ascent of the Pick value
/// over unimodular data. Deterministic given (inputs, seed).
double carleson_estimate(const NodeSet& sigma, int budget, std::uint64_t seed);

/// max_i of the evaluation-functional norm over the nodes of sigma.
double max_eval_functional(const NodeSet& sigma, const SpaceSpec& space);

}  // namespace blab
