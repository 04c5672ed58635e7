#include "analytic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace blab {

TaylorSeries::TaylorSeries(std::vector<cplx> c, bool is_exact) : coeffs(std::move(c)), exact(is_exact) {
    if (coeffs.empty()) coeffs.push_back(cplx(0.0));
}

TaylorSeries TaylorSeries::zero(int degree_cap) {
    if (degree_cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
    return TaylorSeries(std::vector<cplx>(static_cast<size_t>(degree_cap) + 1, cplx(0.0)), true);
}

int TaylorSeries::trimmed_degree(double tol) const {
    int d = degree_cap();
    while (d > 0 && std::abs(coeffs[static_cast<size_t>(d)]) <= tol) --d;
    return d;
}

std::string TaylorSeries::to_json() const {
    nlohmann::ordered_json j;
    auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
    for (const cplx& c : coeffs) arr.push_back({{"re", c.real()}, {"im", c.imag()}});
    j["exact"] = exact;
    return j.dump();
}

TaylorSeries TaylorSeries::parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("series JSON: ") + e.what());
    }
    const nlohmann::json* arr = nullptr;
    bool exact = true;
    if (j.is_array()) {
        arr = &j;
    } else if (j.is_object() && j.contains("coeffs")) {
        arr = &j["coeffs"];
        if (j.contains("exact")) exact = j["exact"].get<bool>();
    } else {
        throw std::invalid_argument("series JSON: expected an array or an object with \"coeffs\"");
    }
    std::vector<cplx> c;
    c.reserve(arr->size());
    for (const auto& item : *arr) {
        if (item.is_number()) {
            c.emplace_back(item.get<double>(), 0.0);
        } else if (item.is_object()) {
            c.emplace_back(item.value("re", 0.0), item.value("im", 0.0));
        } else if (item.is_array() && item.size() == 2) {
            c.emplace_back(item[0].get<double>(), item[1].get<double>());
        } else {
            throw std::invalid_argument("series JSON: coefficient must be a number, {re,im} or [re,im]");
        }
    }
    if (c.empty()) throw std::invalid_argument("series JSON: empty coefficient list");
    return TaylorSeries(std::move(c), exact);
}

SpaceSpec SpaceSpec::hardy(double p) {
    if (!(p >= 1.0)) throw std::invalid_argument("Hardy exponent must satisfy p >= 1");
    SpaceSpec s;
    s.kind = Kind::hardy;
    s.param = p;
    return s;
}

SpaceSpec SpaceSpec::weighted(double alpha) {
    if (!(alpha >= -1.0 && alpha <= 0.0)) throw std::invalid_argument("weight exponent must lie in [-1, 0]");
    SpaceSpec s;
    s.kind = Kind::weighted;
    s.param = alpha;
    return s;
}

bool SpaceSpec::is_h2() const {
    if (kind == Kind::hardy) return param == 2.0;
    return param == 0.0;
}

std::string SpaceSpec::label() const {
    std::ostringstream os;
    if (kind == Kind::hardy) {
        if (std::isinf(param)) return "hinf";
        if (param == 1.0) return "h1";
        if (param == 2.0) return "h2";
        os << "hp:" << param;
        return os.str();
    }
    os << "w2:" << param;
    return os.str();
}

SpaceSpec SpaceSpec::parse(const std::string& text) {
    if (text == "h1") return hardy(1.0);
    if (text == "h2") return hardy(2.0);
    if (text == "hinf" || text == "hp:inf") return hardy(std::numeric_limits<double>::infinity());
    if (text == "bergman") return weighted(-0.5);
    auto value_after = [&](size_t n) {
        try {
            return std::stod(text.substr(n));
        } catch (...) {
            throw std::invalid_argument("space: cannot parse numeric parameter in '" + text + "'");
        }
    };
    if (text.rfind("hp:", 0) == 0) return hardy(value_after(3));
    if (text.rfind("w2:", 0) == 0) return weighted(value_after(3));
    throw std::invalid_argument("space: expected h1|h2|hinf|hp:<p>|bergman|w2:<alpha>, got '" + text + "'");
}

TaylorSeries ts_add(const TaylorSeries& a, const TaylorSeries& b) {
    std::vector<cplx> c(std::max(a.coeffs.size(), b.coeffs.size()), cplx(0.0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return TaylorSeries(std::move(c), a.exact && b.exact);
}

TaylorSeries ts_scale(const TaylorSeries& a, cplx s) {
    std::vector<cplx> c(a.coeffs);
    for (auto& x : c) x *= s;
    return TaylorSeries(std::move(c), a.exact);
}

TaylorSeries ts_multiply(const TaylorSeries& a, const TaylorSeries& b, int cap) {
    const int da = a.degree_cap();
    const int db = b.degree_cap();
    const int dc = cap < 0 ? da + db : cap;
    std::vector<cplx> c(static_cast<size_t>(dc) + 1, cplx(0.0));
    for (int i = 0; i <= std::min(da, dc); ++i) {
        const cplx ai = a.coeffs[static_cast<size_t>(i)];
        if (ai == cplx(0.0)) continue;
        const int jmax = std::min(db, dc - i);
        for (int j = 0; j <= jmax; ++j) c[static_cast<size_t>(i + j)] += ai * b.coeffs[static_cast<size_t>(j)];
    }
    const bool exact = a.exact && b.exact && (cap < 0 || da + db <= cap);
    return TaylorSeries(std::move(c), exact);
}

void ts_mul_linear_inplace(std::vector<cplx>& s, cplx a, cplx b) {
    cplx prev(0.0);
    for (auto& x : s) {
        const cplx cur = x;
        x = a * cur + b * prev;
        prev = cur;
    }
}

void ts_div_one_minus_inplace(std::vector<cplx>& s, cplx c) {
    cplx prev(0.0);
    for (auto& x : s) {
        x += c * prev;
        prev = x;
    }
}

cplx horner(const TaylorSeries& f, cplx z) {
    cplx acc(0.0);
    for (size_t i = f.coeffs.size(); i-- > 0;) acc = acc * z + f.coeffs[i];
    return acc;
}

cplx evaluate(const TaylorSeries& f, cplx z) {
    if (!(std::abs(z) < 1.0)) throw std::domain_error("evaluate: point must lie in the open unit disc");
    return horner(f, z);
}

cplx cauchy_pairing(const TaylorSeries& h, const TaylorSeries& g) {
    const size_t n = std::min(h.coeffs.size(), g.coeffs.size());
    cplx acc(0.0);
    for (size_t i = 0; i < n; ++i) acc += h.coeffs[i] * std::conj(g.coeffs[i]);
    return acc;
}

int boundary_quadrature_size(int degree) {
    return std::max(4096, 8 * (degree + 1));
}

namespace {

double hardy_norm(const TaylorSeries& f, double p) {
    const int deg = f.degree_cap();
    const int m = boundary_quadrature_size(deg);
    // Internal Nyquist guard; the sizing rule always satisfies it.
    assert(m >= 2 * deg + 1);
    if (std::isinf(p)) {
        double best = 0.0;
        for (int k = 0; k < m; ++k) {
            const cplx w = std::polar(1.0, 2.0 * kPi * k / m);
            best = std::max(best, std::abs(horner(f, w)));
        }
        return best;
    }
    if (!f.exact) throw std::domain_error("space_norm: Hardy p < inf requires an exact polynomial");
    double acc = 0.0;
    for (int k = 0; k < m; ++k) {
        const cplx w = std::polar(1.0, 2.0 * kPi * k / m);
        acc += std::pow(std::abs(horner(f, w)), p);
    }
    return std::pow(acc / m, 1.0 / p);
}

}  // namespace

double space_norm(const TaylorSeries& f, const SpaceSpec& space) {
    if (space.kind == SpaceSpec::Kind::hardy) return hardy_norm(f, space.param);
    const double alpha = space.param;
    double acc = 0.0;
    for (size_t k = 0; k < f.coeffs.size(); ++k)
        acc += std::norm(f.coeffs[k]) * std::pow(static_cast<double>(k) + 1.0, 2.0 * alpha);
    return std::sqrt(acc);
}

TaylorSeries derivative(const TaylorSeries& f) {
    if (f.coeffs.size() <= 1) return TaylorSeries({cplx(0.0)}, f.exact);
    std::vector<cplx> c(f.coeffs.size() - 1);
    for (size_t k = 0; k < c.size(); ++k) c[k] = static_cast<double>(k + 1) * f.coeffs[k + 1];
    return TaylorSeries(std::move(c), f.exact);
}

TaylorSeries fejer_multiplier(int n) {
    if (n < 1) throw std::domain_error("fejer_multiplier: order must be >= 1");
    const int m = (n % 2 == 0) ? n / 2 : (n + 1) / 2;
    auto window = [m](int j) {
        const int a = std::abs(j);
        return a <= m ? 1.0 - static_cast<double>(a) / (m + 1) : 0.0;
    };
    std::vector<cplx> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[static_cast<size_t>(j)] = window(j) + window(j - m);
    return TaylorSeries(std::move(c), true);
}

TaylorSeries multiplier_apply(const TaylorSeries& f, const TaylorSeries& mult) {
    const size_t n = std::min(f.coeffs.size(), mult.coeffs.size());
    std::vector<cplx> c(n);
    for (size_t i = 0; i < n; ++i) c[i] = f.coeffs[i] * mult.coeffs[i];
    return TaylorSeries(std::move(c), f.exact && mult.exact);
}

namespace {

// No zeros in |z| <= 1 + delta, delta = 0.02: grid minimum plus winding count
// on the circle of radius 1.02.
void require_outer_safe(const TaylorSeries& f) {
    constexpr int kGrid = 4096;
    constexpr double kRadius = 1.02;
    double min_abs = std::numeric_limits<double>::infinity();
    double max_abs = 0.0;
    double winding = 0.0;
    cplx prev = horner(f, cplx(kRadius, 0.0));
    for (int k = 1; k <= kGrid; ++k) {
        const cplx w = std::polar(kRadius, 2.0 * kPi * k / kGrid);
        const cplx v = horner(f, w);
        const double a = std::abs(v);
        min_abs = std::min(min_abs, a);
        max_abs = std::max(max_abs, a);
        winding += std::arg(v / prev);
        prev = v;
    }
    if (!(min_abs > 1e-13 * std::max(1.0, max_abs)))
        throw std::domain_error("zero_free_power: not outer-safe (near-zero on the margin circle)");
    if (std::abs(winding) > kPi)
        throw std::domain_error("zero_free_power: not outer-safe (zeros inside the margin circle)");
}

}  // namespace

TaylorSeries zero_free_power(const TaylorSeries& f, double exponent, int degree_cap) {
    if (!(exponent > 0.0)) throw std::domain_error("zero_free_power: exponent must be positive");
    if (!f.exact) throw std::domain_error("zero_free_power: carrier must be an exact polynomial");
    if (degree_cap < 0) throw std::invalid_argument("zero_free_power: degree cap must be nonnegative");
    require_outer_safe(f);

    const int df = f.trimmed_degree(0.0);
    std::vector<cplx> g(static_cast<size_t>(degree_cap) + 1, cplx(0.0));
    const cplx f0 = f.coeffs[0];
    g[0] = std::pow(f0, cplx(exponent, 0.0));
    // f g' = exponent f' g, solved coefficient by coefficient.
    for (int k = 1; k <= degree_cap; ++k) {
        cplx acc(0.0);
        for (int j = 1; j <= std::min(k, df); ++j)
            acc += ((exponent + 1.0) * j - k) * f.coeffs[static_cast<size_t>(j)] * g[static_cast<size_t>(k - j)];
        g[static_cast<size_t>(k)] = acc / (static_cast<double>(k) * f0);
    }
    const double nearest = std::round(exponent);
    const bool integral = std::abs(exponent - nearest) < 1e-12 && nearest >= 1.0;
    const bool exact = integral && degree_cap >= static_cast<int>(nearest) * df;
    return TaylorSeries(std::move(g), exact);
}

}  // namespace blab
