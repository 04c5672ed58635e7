#pragma once

#include <vector>

#include "blaschke.hpp"
#include "common.hpp"

namespace blab::testing {

/// Random node set: count nodes, top modulus below rmax, optional repeated
/// nodes. Deterministic given the generator state.
inline NodeSet random_sigma(SplitRng& rng, int count, double rmax, bool allow_mult = false) {
    std::vector<Node> nodes;
    int left = count;
    while (left > 0) {
        int mult = 1;
        if (allow_mult && left > 1 && rng.uniform() < 0.3) mult = 1 + static_cast<int>(rng.uniform() * 2.0);
        mult = std::min(mult, left);
        const double rho = rmax * std::sqrt(rng.uniform());
        nodes.push_back({std::polar(rho, 2.0 * kPi * rng.uniform()), mult});
        left -= mult;
    }
    return NodeSet(std::move(nodes));
}

/// Random distinct nodes with pairwise separation, for Pick-type problems.
inline NodeSet random_distinct_sigma(SplitRng& rng, int count, double rmax, double sep = 0.05) {
    std::vector<cplx> pts;
    while (static_cast<int>(pts.size()) < count) {
        const cplx z = std::polar(rmax * std::sqrt(rng.uniform()), 2.0 * kPi * rng.uniform());
        bool ok = true;
        for (cplx p : pts)
            if (std::abs(p - z) < sep) ok = false;
        if (ok) pts.push_back(z);
    }
    return NodeSet::from_points(pts);
}

inline std::vector<cplx> random_poly_coeffs(SplitRng& rng, int degree) {
    std::vector<cplx> c(static_cast<size_t>(degree) + 1);
    for (auto& x : c) x = rng.normal_complex();
    return c;
}

}  // namespace blab::testing
