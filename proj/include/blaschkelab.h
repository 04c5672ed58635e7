/*
 * blaschkelab — two-sided bounds and exact quotient norms for constrained
 * H-infinity interpolation on finite node sets in the unit disc.
 *
 * C interface of the shared library. All functions return a bl_status code;
 * results travel through out-parameters. On failure, bl_last_error() holds a
 * thread-local message describing what went wrong. Handles are opaque and
 * must be released with the matching _free call. Every entry point is pure
 * and thread-safe; results are deterministic given inputs and seed,
 * independently of BLASCHKE_LAB_THREADS.
 */

#ifndef BLASCHKELAB_H
#define BLASCHKELAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct bl_nodeset bl_nodeset; /* finite node multiset in the disc */
typedef struct bl_series bl_series;   /* truncated Taylor series */

typedef enum bl_status {
    BL_OK = 0,
    BL_ERR_INVALID = 1,     /* bad argument or violated precondition */
    BL_ERR_DOMAIN = 2,      /* input outside the mathematical domain */
    BL_ERR_PARSE = 3,       /* malformed JSON input */
    BL_ERR_UNSUPPORTED = 4, /* no formula adopted for this space */
    BL_ERR_NUMERIC = 5      /* solver failed to converge / internal check */
} bl_status;

/* Coefficient space selector. For BL_SPACE_HARDY, param is the exponent p
 * (use INFINITY for the sup norm); for BL_SPACE_WEIGHTED, param is the weight
 * exponent alpha in [-1, 0] (0 = H^2, -0.5 = Bergman). */
typedef enum bl_space_kind { BL_SPACE_HARDY = 0, BL_SPACE_WEIGHTED = 1 } bl_space_kind;

typedef struct bl_space {
    int kind;
    double param;
} bl_space;

const char* bl_version(void);
const char* bl_last_error(void);

/* ---- node sets ---------------------------------------------------------- */

/* mult may be NULL (all ones). */
bl_status bl_nodeset_create(const double* re, const double* im, const int* mult, size_t count, bl_nodeset** out);
/* Schema: [{"re": float, "im": float, "mult": int}, ...]; mult defaults to 1. */
bl_status bl_nodeset_parse_json(const char* json, bl_nodeset** out);
void bl_nodeset_free(bl_nodeset* ns);
bl_status bl_nodeset_total(const bl_nodeset* ns, int* n);
bl_status bl_nodeset_radius(const bl_nodeset* ns, double* r);
bl_status bl_nodeset_distinct(const bl_nodeset* ns, int* yes);

/* ---- series ------------------------------------------------------------- */

bl_status bl_series_create(const double* re, const double* im, size_t count, int exact, bl_series** out);
/* Accepts [c0, c1, ...] or {"coeffs": [...], "exact": bool}; entries may be
 * numbers, {re, im} objects, or [re, im] pairs. */
bl_status bl_series_parse_json(const char* json, bl_series** out);
void bl_series_free(bl_series* s);
bl_status bl_series_length(const bl_series* s, size_t* len);
bl_status bl_series_copy(const bl_series* s, double* re, double* im, size_t cap);

/* ---- closed-form bounds -------------------------------------------------- */

bl_status bl_ub_energy(const bl_nodeset* ns, double* out);
bl_status bl_ub_bprime(const bl_nodeset* ns, double* out);
bl_status bl_ub_poisson(const bl_nodeset* ns, double* out);
bl_status bl_ub_simple(const bl_nodeset* ns, double* out);
/* heuristic (may be NULL) is set when the constant is interpolated rather
 * than pinned by a proved statement. */
bl_status bl_ub_cnr(bl_space space, int n, double r, double* out, int* heuristic);
bl_status bl_lb_closed(bl_space space, int n, double lam_abs, double* out);
bl_status bl_bernstein_alpha(int n, double r, double* out, int* capped);
bl_status bl_bernstein_cap(int n, double r, double* out);
bl_status bl_eval_functional_norm(bl_space space, double t, double* out);
bl_status bl_kernel_projection_sup(const bl_nodeset* ns, double alpha, double* out);

/* ---- worst-case witness pipeline ----------------------------------------- */

/* Witness polynomial over z^n for the one-point multiset of size n at
 * modulus r; order selects the squared profile (1 or 2). poly_out receives
 * the exact polynomial psi. */
bl_status bl_lower_witness(int n, double r, int order, bl_series** poly_out);
bl_status bl_partial_sum_check(int n, double r, int order, double* sum, double* floor_value, int* ok);
bl_status bl_fejer_lower_estimate(const bl_series* psi, int n, double* out);

/* ---- solvers -------------------------------------------------------------- */

bl_status bl_np_value(const bl_nodeset* ns, const double* values_re, const double* values_im, size_t count,
                      double tol, double* out);
bl_status bl_cs_value(const double* re, const double* im, size_t count, double* out);
bl_status bl_quotient_norm(const bl_series* f, const bl_nodeset* ns, double tol, double* out);

/* Certified lower estimate of the interpolation constant. witness_re/im (may
 * be NULL) receive the best coefficient vector in the basis named by
 * basis_out: 0 = malmquist, 1 = kernel-gs, 2 = poly. */
bl_status bl_c_sigma_estimate(const bl_nodeset* ns, bl_space space, int budget, uint64_t seed, double* out,
                              double* witness_re, double* witness_im, size_t witness_cap, size_t* witness_len,
                              int* basis_out);
bl_status bl_carleson_estimate(const bl_nodeset* ns, int budget, uint64_t seed, double* out);
bl_status bl_max_eval_functional(const bl_nodeset* ns, bl_space space, double* out);

/* Worst empirical derivative-to-norm ratio over `trials` random unit elements
 * of the model space at parameters (n, r). */
bl_status bl_bernstein_trials(int n, double r, int trials, uint64_t seed, double* max_ratio, double* alpha,
                              double* cap, int* violations);

#ifdef __cplusplus
}
#endif

#endif /* BLASCHKELAB_H */
