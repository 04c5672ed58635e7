#pragma once

#include <string>
#include <utility>
#include <vector>

#include "analytic.hpp"
#include "common.hpp"

namespace blab {

struct Node {
    cplx lambda;
    int mult = 1;
};

/// Finite node multiset in the open disc. Insertion order is preserved: the
/// Malmquist basis depends on it, although every norm and bound downstream is
/// order-invariant. n and r are always recomputed from the nodes.
class NodeSet {
public:
    explicit NodeSet(std::vector<Node> nodes);
    static NodeSet from_points(const std::vector<cplx>& points);

    const std::vector<Node>& nodes() const { return nodes_; }
    int total() const;
    double radius() const;
    /// lambda_1, ..., lambda_n with repeats spelled out.
    std::vector<cplx> flat() const;
    bool distinct(double separation = 1e-10) const;

    /// Schema: [{"re": float, "im": float, "mult": int}, ...]; mult defaults to 1.
    static NodeSet parse_json(const std::string& text);
    std::string to_json() const;

private:
    std::vector<Node> nodes_;
};

/// (lambda - z) / (1 - conj(lambda) z); |lambda| < 1, z away from the pole.
cplx eval_factor(cplx lambda, cplx z);

struct BlaschkeProduct {
    NodeSet sigma;
};

cplx eval_product(const BlaschkeProduct& b, cplx z);
inline cplx eval_product(const NodeSet& sigma, cplx z) { return eval_product(BlaschkeProduct{sigma}, z); }

/// B'(w) on the unit circle via the product-rule sum; w is normalized to
/// unit modulus first.
cplx boundary_derivative(const BlaschkeProduct& b, cplx w);

/// Both sides of |b_lambda(z)|^2 = 1 + (|z|^2 - 1)(1 - |lambda|^2)/|1 - conj(lambda) z|^2,
/// valid for |z| < 1/|lambda|. Exposed for the test suite.
std::pair<double, double> factor_modulus_identity(cplx lambda, cplx z);

/// Taylor expansion of one factor to the given cap.
TaylorSeries factor_series(cplx lambda, int degree_cap);

/// Taylor expansion of the full product to the given cap.
TaylorSeries blaschke_series(const NodeSet& sigma, int degree_cap);

}  // namespace blab
