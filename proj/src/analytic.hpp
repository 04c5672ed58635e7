#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace blab {

/// Truncated power series of an analytic function on the disc. Index k holds
/// the coefficient of z^k; `exact` marks a polynomial that is fully stored
/// (no truncation tail).
struct TaylorSeries {
    std::vector<cplx> coeffs{cplx(0.0, 0.0)};
    bool exact = false;

    TaylorSeries() = default;
    TaylorSeries(std::vector<cplx> c, bool is_exact);

    static TaylorSeries polynomial(std::vector<cplx> c) { return TaylorSeries(std::move(c), true); }
    static TaylorSeries zero(int degree_cap);

    int degree_cap() const { return static_cast<int>(coeffs.size()) - 1; }
    cplx coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[static_cast<size_t>(k)] : cplx(0.0);
    }
    /// Degree ignoring trailing (near-)zero coefficients.
    int trimmed_degree(double tol = 0.0) const;

    std::string to_json() const;
    static TaylorSeries parse_json(const std::string& text);
};

/// Coefficient space in force: Hardy H^p (p in [1, inf]) or the weighted
/// sequence space with norm (sum |f^(k)|^2 (k+1)^{2 alpha})^{1/2},
/// alpha in [-1, 0]. alpha = 0 is H^2 and alpha = -1/2 the Bergman space.
struct SpaceSpec {
    enum class Kind { hardy, weighted };
    Kind kind = Kind::hardy;
    double param = 2.0;  // p for hardy, alpha for weighted

    static SpaceSpec hardy(double p);
    static SpaceSpec weighted(double alpha);
    static SpaceSpec bergman() { return weighted(-0.5); }

    bool is_hardy() const { return kind == Kind::hardy; }
    bool is_h2() const;
    std::string label() const;
    /// Accepts h1 | h2 | hinf | hp:<p|inf> | bergman | w2:<alpha>.
    static SpaceSpec parse(const std::string& text);
};

// -- elementary series arithmetic ------------------------------------------

TaylorSeries ts_add(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries ts_scale(const TaylorSeries& a, cplx s);
/// Truncated Cauchy product; cap < 0 keeps the full degree da + db.
TaylorSeries ts_multiply(const TaylorSeries& a, const TaylorSeries& b, int cap = -1);
/// In place: S <- S * (a + b z), same length.
void ts_mul_linear_inplace(std::vector<cplx>& s, cplx a, cplx b);
/// In place: S <- S / (1 - c z), same length (stable forward recurrence).
void ts_div_one_minus_inplace(std::vector<cplx>& s, cplx c);

/// Horner evaluation without the |z| < 1 guard; used internally on circles of
/// radius >= 1 where the stored truncation is the object of interest.
cplx horner(const TaylorSeries& f, cplx z);

// -- core operations ---------------------------------------------------------

/// Evaluates the stored truncation at z, |z| < 1 enforced.
cplx evaluate(const TaylorSeries& f, cplx z);

/// sum_k h^(k) conj(g^(k)) over the shared coefficient range.
cplx cauchy_pairing(const TaylorSeries& h, const TaylorSeries& g);

/// Uniform boundary grid size used for Hardy quadrature at this degree.
int boundary_quadrature_size(int degree);

double space_norm(const TaylorSeries& f, const SpaceSpec& space);

TaylorSeries derivative(const TaylorSeries& f);

/// Analytic-side coefficient profile of F_n = Phi_m + z^m Phi_m, truncated at
/// degree n; Phi_m is the Fejer window with Phi_m^(j) = 1 - |j|/(m+1). The
/// profile is >= 1 on [0, m].
TaylorSeries fejer_multiplier(int n);

/// Coefficientwise (Hadamard) product; degree cap is the smaller of the two.
TaylorSeries multiplier_apply(const TaylorSeries& f, const TaylorSeries& mult);

/// f^exponent for f without zeros in the closed disc (margin checked on the
/// circle of radius 1.02 plus an argument-principle winding count), principal
/// branch fixed by f(0). Truncated at degree_cap.
TaylorSeries zero_free_power(const TaylorSeries& f, double exponent, int degree_cap);

}  // namespace blab
