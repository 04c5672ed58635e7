#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "model_space.hpp"

namespace blab {

/// sup over a boundary-biased grid of ((1 - |B(z)|^2)/(1 - |z|^2))^{1/2}.
double ub_energy(const NodeSet& sigma);

/// sqrt(2) sup_{|w|=1} |B'(w)|^{1/2} on the angle grid.
double ub_bprime(const NodeSet& sigma);

/// sup_{|w|=1} (sum_k (1 - |lambda_k|^2)/|w - lambda_k|^2)^{1/2}.
double ub_poisson(const NodeSet& sigma);

/// (sum_j (1 + |lambda_j|)/(1 - |lambda_j|))^{1/2}.
double ub_simple(const NodeSet& sigma);

/// Closed-form upper bound for the worst interpolation constant at (n, r).
/// Hardy p gives A_p (n/(1-r))^{1/p} with A_1 = 2, A_2 = sqrt(2), A_inf = 1
/// and the log-convex interpolant A_p = 2^{1/p} otherwise (heuristic flag).
/// Weighted alpha interpolates between sqrt(2) (alpha = 0) and 2 sqrt(10)
/// (alpha = -1); alpha = -1/2 is pinned to 10^{1/4} sqrt(2) n/(1-r).
double ub_cnr(const SpaceSpec& space, int n, double r, bool* heuristic = nullptr);

/// Differentiation constant on K_B: [1 + (1+r)(n-1) + sqrt(n-2)]/(1-r) for
/// n >= 2, with fallback to the 3n/(1-r) cap below that (capped flag).
double bernstein_alpha(int n, double r, bool* capped = nullptr);
double bernstein_cap(int n, double r);

struct BernsteinTrialResult {
    double alpha = 0.0;
    double cap = 0.0;
    double max_ratio = 0.0;
    int violations = 0;
    int trials = 0;
};

/// Worst empirical ||f'||_2 / ||f||_2 over random unit elements of K_B for
/// random node sets with the requested (n, r).
BernsteinTrialResult bernstein_trials(int n, double r, int trials, std::uint64_t seed);

/// Norm of f -> f(t) on the space; closed forms for alpha in {0, -1/2},
/// kernel-diagonal series otherwise. Hardy p != 2 is unsupported.
double eval_functional_norm(const SpaceSpec& space, double t);

/// Worst-case witness for the one-point multiset of size n at lambda = -r.
/// `poly` is the exact polynomial b (1-r^2)^{-N/2} psi1^N living over z^n,
/// psi1 = 1 + (1+r)(z + ... + z^{n-1}) + r z^n; `composed` is the truncated
/// expansion of the uncomposed witness, whose weighted norm is verified to
/// stay within the unit ball.
struct WitnessPair {
    TaylorSeries composed;
    TaylorSeries poly;
    int n = 0;
    double r = 0.0;
    int power = 1;
};

WitnessPair lower_witness(int n, double r, int order);

struct PartialSumCheck {
    double sum = 0.0;          // sum of psi^(j), j <= m
    double floor_value = 0.0;  // claimed lower bound for that sum
    bool ok = false;
    bool exact_checked = false;  // integer-arithmetic route ran (10 r integral)
    bool exact_ok = false;
    int m = 0;
};

/// Partial coefficient sums of the witness against their closed-form floors;
/// when 10 r is integral the psi1 floors are also verified in exact integer
/// arithmetic.
PartialSumCheck partial_sum_check(int n, double r, int order);

/// (1/2) sup-norm of the Fejer-multiplied witness on the circle grid; a lower
/// estimate for the quotient norm over z^n.
double fejer_lower_estimate(const TaylorSeries& psi, int n);

/// Closed-form lower bounds: Hardy even p gives 32^{-1/p}(n/(1-|lambda|))^{1/p}
/// (p = 2: (4 sqrt 2)^{-1} sqrt), Bergman gives n/(32 (1-|lambda|)).
double lb_closed(const SpaceSpec& space, int n, double lam_abs);

/// F = f^{q/p} for outer-safe f with p/q a positive integer; interpolants of F
/// dominate those of f raised to q/p.
TaylorSeries outer_power_witness(const TaylorSeries& f, double p, double q, int degree_cap);

/// Growth bound for Malmquist elements on the circle of radius 2/(1+r); the
/// displayed product is singular at r = 0 and is evaluated in its limit form
/// (flagged below r = 0.05).
double c1_growth_factor(int n, double r, bool* limit_form = nullptr);

}  // namespace blab
