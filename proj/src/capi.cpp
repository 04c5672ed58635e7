#include "blaschkelab.h"

#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "analytic.hpp"
#include "blaschke.hpp"
#include "bounds.hpp"
#include "model_space.hpp"
#include "solvers.hpp"

struct bl_nodeset {
    blab::NodeSet impl;
};

struct bl_series {
    blab::TaylorSeries impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

blab::SpaceSpec to_space(bl_space s) {
    if (s.kind == BL_SPACE_HARDY) return blab::SpaceSpec::hardy(s.param);
    if (s.kind == BL_SPACE_WEIGHTED) return blab::SpaceSpec::weighted(s.param);
    throw std::invalid_argument("space: unknown kind");
}

template <typename F>
bl_status guarded(F&& fn) {
    try {
        fn();
        g_last_error.clear();
        return BL_OK;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return BL_ERR_DOMAIN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        const char* what = e.what();
        if (std::strstr(what, "JSON")) return BL_ERR_PARSE;
        if (std::strstr(what, "unsupported") || std::strstr(what, "no closed form") ||
            std::strstr(what, "proved only") || std::strstr(what, "supported spaces"))
            return BL_ERR_UNSUPPORTED;
        return BL_ERR_INVALID;
    } catch (const std::exception& e) {
        set_error(e.what());
        return BL_ERR_NUMERIC;
    } catch (...) {
        set_error("unknown error");
        return BL_ERR_NUMERIC;
    }
}

std::vector<blab::cplx> zip(const double* re, const double* im, size_t count) {
    std::vector<blab::cplx> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) out.emplace_back(re ? re[i] : 0.0, im ? im[i] : 0.0);
    return out;
}

}  // namespace

extern "C" {

const char* bl_version(void) { return "0.1.0"; }

const char* bl_last_error(void) { return g_last_error.c_str(); }

bl_status bl_nodeset_create(const double* re, const double* im, const int* mult, size_t count, bl_nodeset** out) {
    return guarded([&] {
        if (!out || !re) throw std::invalid_argument("nodeset_create: null argument");
        std::vector<blab::Node> nodes;
        nodes.reserve(count);
        for (size_t i = 0; i < count; ++i)
            nodes.push_back({blab::cplx(re[i], im ? im[i] : 0.0), mult ? mult[i] : 1});
        *out = new bl_nodeset{blab::NodeSet(std::move(nodes))};
    });
}

bl_status bl_nodeset_parse_json(const char* json, bl_nodeset** out) {
    return guarded([&] {
        if (!out || !json) throw std::invalid_argument("nodeset_parse: null argument");
        *out = new bl_nodeset{blab::NodeSet::parse_json(json)};
    });
}

void bl_nodeset_free(bl_nodeset* ns) { delete ns; }

bl_status bl_nodeset_total(const bl_nodeset* ns, int* n) {
    return guarded([&] {
        if (!ns || !n) throw std::invalid_argument("nodeset_total: null argument");
        *n = ns->impl.total();
    });
}

bl_status bl_nodeset_radius(const bl_nodeset* ns, double* r) {
    return guarded([&] {
        if (!ns || !r) throw std::invalid_argument("nodeset_radius: null argument");
        *r = ns->impl.radius();
    });
}

bl_status bl_nodeset_distinct(const bl_nodeset* ns, int* yes) {
    return guarded([&] {
        if (!ns || !yes) throw std::invalid_argument("nodeset_distinct: null argument");
        *yes = ns->impl.distinct() ? 1 : 0;
    });
}

bl_status bl_series_create(const double* re, const double* im, size_t count, int exact, bl_series** out) {
    return guarded([&] {
        if (!out || !re || count == 0) throw std::invalid_argument("series_create: null or empty input");
        *out = new bl_series{blab::TaylorSeries(zip(re, im, count), exact != 0)};
    });
}

bl_status bl_series_parse_json(const char* json, bl_series** out) {
    return guarded([&] {
        if (!out || !json) throw std::invalid_argument("series_parse: null argument");
        *out = new bl_series{blab::TaylorSeries::parse_json(json)};
    });
}

void bl_series_free(bl_series* s) { delete s; }

bl_status bl_series_length(const bl_series* s, size_t* len) {
    return guarded([&] {
        if (!s || !len) throw std::invalid_argument("series_length: null argument");
        *len = s->impl.coeffs.size();
    });
}

bl_status bl_series_copy(const bl_series* s, double* re, double* im, size_t cap) {
    return guarded([&] {
        if (!s) throw std::invalid_argument("series_copy: null argument");
        const size_t n = std::min(cap, s->impl.coeffs.size());
        for (size_t i = 0; i < n; ++i) {
            if (re) re[i] = s->impl.coeffs[i].real();
            if (im) im[i] = s->impl.coeffs[i].imag();
        }
    });
}

bl_status bl_ub_energy(const bl_nodeset* ns, double* out) {
    return guarded([&] {
        if (!ns || !out) throw std::invalid_argument("ub_energy: null argument");
        *out = blab::ub_energy(ns->impl);
    });
}

bl_status bl_ub_bprime(const bl_nodeset* ns, double* out) {
    return guarded([&] {
        if (!ns || !out) throw std::invalid_argument("ub_bprime: null argument");
        *out = blab::ub_bprime(ns->impl);
    });
}

bl_status bl_ub_poisson(const bl_nodeset* ns, double* out) {
    return guarded([&] {
        if (!ns || !out) throw std::invalid_argument("ub_poisson: null argument");
        *out = blab::ub_poisson(ns->impl);
    });
}

bl_status bl_ub_simple(const bl_nodeset* ns, double* out) {
    return guarded([&] {
        if (!ns || !out) throw std::invalid_argument("ub_simple: null argument");
        *out = blab::ub_simple(ns->impl);
    });
}

bl_status bl_ub_cnr(bl_space space, int n, double r, double* out, int* heuristic) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("ub_cnr: null argument");
        bool h = false;
        *out = blab::ub_cnr(to_space(space), n, r, &h);
        if (heuristic) *heuristic = h ? 1 : 0;
    });
}

bl_status bl_lb_closed(bl_space space, int n, double lam_abs, double* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("lb_closed: null argument");
        *out = blab::lb_closed(to_space(space), n, lam_abs);
    });
}

bl_status bl_bernstein_alpha(int n, double r, double* out, int* capped) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("bernstein_alpha: null argument");
        bool c = false;
        *out = blab::bernstein_alpha(n, r, &c);
        if (capped) *capped = c ? 1 : 0;
    });
}

bl_status bl_bernstein_cap(int n, double r, double* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("bernstein_cap: null argument");
        *out = blab::bernstein_cap(n, r);
    });
}

bl_status bl_eval_functional_norm(bl_space space, double t, double* out) {
    return guarded([&] {
        if (!out) throw std::invalid_argument("eval_functional_norm: null argument");
        *out = blab::eval_functional_norm(to_space(space), t);
    });
}

bl_status bl_kernel_projection_sup(const bl_nodeset* ns, double alpha, double* out) {
    return guarded([&] {
        if (!ns || !out) throw std::invalid_argument("kernel_projection_sup: null argument");
        *out = blab::kernel_projection_sup(ns->impl, blab::KernelSpec{alpha});
    });
}

bl_status bl_lower_witness(int n, double r, int order, bl_series** poly_out) {
    return guarded([&] {
        if (!poly_out) throw std::invalid_argument("lower_witness: null argument");
        *poly_out = new bl_series{blab::lower_witness(n, r, order).poly};
    });
}

bl_status bl_partial_sum_check(int n, double r, int order, double* sum, double* floor_value, int* ok) {
    return guarded([&] {
        const auto res = blab::partial_sum_check(n, r, order);
        if (sum) *sum = res.sum;
        if (floor_value) *floor_value = res.floor_value;
        if (ok) *ok = (res.ok && (!res.exact_checked || res.exact_ok)) ? 1 : 0;
    });
}

bl_status bl_fejer_lower_estimate(const bl_series* psi, int n, double* out) {
    return guarded([&] {
        if (!psi || !out) throw std::invalid_argument("fejer_lower_estimate: null argument");
        *out = blab::fejer_lower_estimate(psi->impl, n);
    });
}

bl_status bl_np_value(const bl_nodeset* ns, const double* values_re, const double* values_im, size_t count,
                      double tol, double* out) {
    return guarded([&] {
        if (!ns || !values_re || !out) throw std::invalid_argument("np_value: null argument");
        blab::PickProblem prob;
        prob.nodes = ns->impl.flat();
        prob.values = zip(values_re, values_im, count);
        *out = blab::np_value(prob, tol);
    });
}

bl_status bl_cs_value(const double* re, const double* im, size_t count, double* out) {
    return guarded([&] {
        if (!re || !out || count == 0) throw std::invalid_argument("cs_value: null or empty input");
        *out = blab::cs_value(zip(re, im, count));
    });
}

bl_status bl_quotient_norm(const bl_series* f, const bl_nodeset* ns, double tol, double* out) {
    return guarded([&] {
        if (!f || !ns || !out) throw std::invalid_argument("quotient_norm: null argument");
        *out = blab::quotient_norm(f->impl, ns->impl, tol);
    });
}

bl_status bl_c_sigma_estimate(const bl_nodeset* ns, bl_space space, int budget, uint64_t seed, double* out,
                              double* witness_re, double* witness_im, size_t witness_cap, size_t* witness_len,
                              int* basis_out) {
    return guarded([&] {
        if (!ns || !out) throw std::invalid_argument("c_sigma_estimate: null argument");
        const auto res = blab::c_sigma_estimate(ns->impl, to_space(space), budget, seed);
        *out = res.value;
        const size_t n = std::min(witness_cap, res.witness.size());
        for (size_t i = 0; i < n; ++i) {
            if (witness_re) witness_re[i] = res.witness[i].real();
            if (witness_im) witness_im[i] = res.witness[i].imag();
        }
        if (witness_len) *witness_len = res.witness.size();
        if (basis_out) *basis_out = res.basis == "malmquist" ? 0 : (res.basis == "kernel-gs" ? 1 : 2);
    });
}

bl_status bl_carleson_estimate(const bl_nodeset* ns, int budget, uint64_t seed, double* out) {
    return guarded([&] {
        if (!ns || !out) throw std::invalid_argument("carleson_estimate: null argument");
        *out = blab::carleson_estimate(ns->impl, budget, seed);
    });
}

bl_status bl_max_eval_functional(const bl_nodeset* ns, bl_space space, double* out) {
    return guarded([&] {
        if (!ns || !out) throw std::invalid_argument("max_eval_functional: null argument");
        *out = blab::max_eval_functional(ns->impl, to_space(space));
    });
}

bl_status bl_bernstein_trials(int n, double r, int trials, uint64_t seed, double* max_ratio, double* alpha,
                              double* cap, int* violations) {
    return guarded([&] {
        const auto res = blab::bernstein_trials(n, r, trials, seed);
        if (max_ratio) *max_ratio = res.max_ratio;
        if (alpha) *alpha = res.alpha;
        if (cap) *cap = res.cap;
        if (violations) *violations = res.violations;
    });
}

}  // extern "C"
