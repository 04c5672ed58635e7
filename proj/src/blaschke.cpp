#include "blaschke.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace blab {

NodeSet::NodeSet(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    if (nodes_.empty()) throw std::invalid_argument("node set must be nonempty");
    for (const Node& nd : nodes_) {
        if (!(std::abs(nd.lambda) < 1.0)) throw std::invalid_argument("node must lie in the open unit disc");
        if (nd.mult < 1) throw std::invalid_argument("node multiplicity must be positive");
    }
}

NodeSet NodeSet::from_points(const std::vector<cplx>& points) {
    std::vector<Node> nodes;
    nodes.reserve(points.size());
    for (cplx p : points) nodes.push_back({p, 1});
    return NodeSet(std::move(nodes));
}

int NodeSet::total() const {
    int n = 0;
    for (const Node& nd : nodes_) n += nd.mult;
    return n;
}

double NodeSet::radius() const {
    double r = 0.0;
    for (const Node& nd : nodes_) r = std::max(r, std::abs(nd.lambda));
    return r;
}

std::vector<cplx> NodeSet::flat() const {
    std::vector<cplx> out;
    out.reserve(static_cast<size_t>(total()));
    for (const Node& nd : nodes_)
        for (int i = 0; i < nd.mult; ++i) out.push_back(nd.lambda);
    return out;
}

bool NodeSet::distinct(double separation) const {
    const auto pts = flat();
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (std::abs(pts[i] - pts[j]) < separation) return false;
    return true;
}

NodeSet NodeSet::parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sigma JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw std::invalid_argument("sigma JSON: expected a nonempty array of nodes");
    std::vector<Node> nodes;
    nodes.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_object()) throw std::invalid_argument("sigma JSON: node must be an object {re, im, mult}");
        Node nd;
        nd.lambda = cplx(item.value("re", 0.0), item.value("im", 0.0));
        nd.mult = item.value("mult", 1);
        nodes.push_back(nd);
    }
    return NodeSet(std::move(nodes));
}

std::string NodeSet::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const Node& nd : nodes_)
        j.push_back({{"re", nd.lambda.real()}, {"im", nd.lambda.imag()}, {"mult", nd.mult}});
    return j.dump();
}

cplx eval_factor(cplx lambda, cplx z) {
    if (!(std::abs(lambda) < 1.0)) throw std::domain_error("Blaschke factor: node must lie in the open disc");
    const cplx den = 1.0 - std::conj(lambda) * z;
    if (std::abs(den) < 1e-300) throw std::domain_error("Blaschke factor: evaluation at the pole");
    return (lambda - z) / den;
}

cplx eval_product(const BlaschkeProduct& b, cplx z) {
    cplx acc(1.0);
    for (const Node& nd : b.sigma.nodes()) {
        const cplx factor = eval_factor(nd.lambda, z);
        for (int i = 0; i < nd.mult; ++i) acc *= factor;
    }
    return acc;
}

cplx boundary_derivative(const BlaschkeProduct& b, cplx w) {
    const double aw = std::abs(w);
    if (!(aw > 0.0)) throw std::domain_error("boundary derivative: w = 0 cannot be normalized");
    w /= aw;
    const auto lams = b.sigma.flat();
    // Factors never vanish on the circle, so the deleted products come from
    // one full product and n divisions.
    cplx full(1.0);
    std::vector<cplx> factors(lams.size());
    for (size_t i = 0; i < lams.size(); ++i) {
        factors[i] = eval_factor(lams[i], w);
        full *= factors[i];
    }
    cplx acc(0.0);
    for (size_t i = 0; i < lams.size(); ++i) {
        const cplx den = 1.0 - std::conj(lams[i]) * w;
        acc += (1.0 - std::norm(lams[i])) / (den * den) * (full / factors[i]);
    }
    return -acc;
}

std::pair<double, double> factor_modulus_identity(cplx lambda, cplx z) {
    const double al = std::abs(lambda);
    if (al > 0.0 && !(std::abs(z) < 1.0 / al))
        throw std::domain_error("modulus identity: need |z| < 1/|lambda|");
    const double lhs = std::norm(eval_factor(lambda, z));
    const double rhs = 1.0 + (std::norm(z) - 1.0) * (1.0 - std::norm(lambda)) / std::norm(1.0 - std::conj(lambda) * z);
    return {lhs, rhs};
}

TaylorSeries factor_series(cplx lambda, int degree_cap) {
    if (!(std::abs(lambda) < 1.0)) throw std::domain_error("Blaschke factor: node must lie in the open disc");
    std::vector<cplx> c(static_cast<size_t>(degree_cap) + 1, cplx(0.0));
    c[0] = lambda;
    if (degree_cap >= 1) {
        // (lambda - z)/(1 - conj(lambda) z) = lambda - (1 - |lambda|^2) sum_{j>=1} conj(lambda)^{j-1} z^j
        const double w = 1.0 - std::norm(lambda);
        cplx pow_l(1.0);
        for (int j = 1; j <= degree_cap; ++j) {
            c[static_cast<size_t>(j)] = -w * pow_l;
            pow_l *= std::conj(lambda);
        }
    }
    return TaylorSeries(std::move(c), lambda == cplx(0.0));
}

TaylorSeries blaschke_series(const NodeSet& sigma, int degree_cap) {
    std::vector<cplx> s(static_cast<size_t>(degree_cap) + 1, cplx(0.0));
    s[0] = 1.0;
    bool poly = true;
    for (cplx lam : sigma.flat()) {
        ts_mul_linear_inplace(s, lam, cplx(-1.0));
        ts_div_one_minus_inplace(s, std::conj(lam));
        poly = poly && lam == cplx(0.0);
    }
    return TaylorSeries(std::move(s), poly);
}

}  // namespace blab
