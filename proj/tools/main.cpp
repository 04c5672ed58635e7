// Command-line front end. Talks to the library exclusively through the C API
// in blaschkelab.h; all numeric output is printed with 17 significant digits
// so reruns are byte-comparable.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "blaschkelab.h"

namespace {

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ordering_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + out_path + "'");
    out << text;
    if (!out) throw input_error("write failed for '" + out_path + "'");
}

void check(bl_status st, const char* what) {
    if (st == BL_OK) return;
    throw input_error(std::string(what) + ": " + bl_last_error());
}

struct SpaceArg {
    bl_space space{BL_SPACE_HARDY, 2.0};
    std::string label;
};

SpaceArg parse_space(const std::string& text) {
    SpaceArg out;
    auto hardy = [&](double p) {
        out.space = {BL_SPACE_HARDY, p};
        if (std::isinf(p))
            out.label = "hinf";
        else if (p == 1.0)
            out.label = "h1";
        else if (p == 2.0)
            out.label = "h2";
        else
            out.label = "hp:" + fmt17(p);
    };
    auto weighted = [&](double a) {
        if (!(a >= -1.0 && a <= 0.0)) throw input_error("space: weight exponent must lie in [-1, 0]");
        out.space = {BL_SPACE_WEIGHTED, a};
        out.label = "w2:" + fmt17(a);
    };
    if (text == "h1") hardy(1.0);
    else if (text == "h2") hardy(2.0);
    else if (text == "hinf" || text == "hp:inf") hardy(HUGE_VAL);
    else if (text == "bergman") weighted(-0.5);
    else if (text.rfind("hp:", 0) == 0) hardy(std::atof(text.c_str() + 3));
    else if (text.rfind("w2:", 0) == 0) weighted(std::atof(text.c_str() + 3));
    else throw input_error("space: expected h1|h2|hinf|hp:<p>|bergman|w2:<alpha>, got '" + text + "'");
    if (out.space.kind == BL_SPACE_HARDY && !(out.space.param >= 1.0))
        throw input_error("space: Hardy exponent must be >= 1");
    return out;
}

bool hardy_even(const SpaceArg& s) {
    if (s.space.kind != BL_SPACE_HARDY || std::isinf(s.space.param)) return false;
    const double half = s.space.param / 2.0;
    return std::abs(half - std::round(half)) < 1e-12;
}

bool is_h2(const SpaceArg& s) {
    return (s.space.kind == BL_SPACE_HARDY && s.space.param == 2.0) ||
           (s.space.kind == BL_SPACE_WEIGHTED && s.space.param == 0.0);
}

bool is_bergman(const SpaceArg& s) { return s.space.kind == BL_SPACE_WEIGHTED && s.space.param == -0.5; }

using NodeSetPtr = std::unique_ptr<bl_nodeset, decltype(&bl_nodeset_free)>;
using SeriesPtr = std::unique_ptr<bl_series, decltype(&bl_series_free)>;

NodeSetPtr load_sigma(const std::string& path) {
    bl_nodeset* ns = nullptr;
    check(bl_nodeset_parse_json(read_file(path).c_str(), &ns), "sigma");
    return NodeSetPtr(ns, &bl_nodeset_free);
}

SeriesPtr load_series(const std::string& path, const char* what) {
    bl_series* s = nullptr;
    check(bl_series_parse_json(read_file(path).c_str(), &s), what);
    return SeriesPtr(s, &bl_series_free);
}

NodeSetPtr repeated_node(double re, double im, int mult) {
    bl_nodeset* ns = nullptr;
    const int m[] = {mult};
    check(bl_nodeset_create(&re, &im, m, 1, &ns), "node set");
    return NodeSetPtr(ns, &bl_nodeset_free);
}

std::vector<std::pair<double, double>> series_values(const bl_series* s) {
    size_t len = 0;
    check(bl_series_length(s, &len), "series");
    std::vector<double> re(len), im(len);
    check(bl_series_copy(s, re.data(), im.data(), len), "series");
    std::vector<std::pair<double, double>> out(len);
    for (size_t i = 0; i < len; ++i) out[i] = {re[i], im[i]};
    return out;
}

// ---- report rows -----------------------------------------------------------

struct Row {
    std::string name;
    std::string side;  // lower | upper
    std::string space;
    int n = 0;
    double r = 0.0;
    double value = 0.0;
    std::string grid;
};

std::string rows_to_csv(const std::vector<Row>& rows) {
    std::string out = "name,side,space,n,r,value,grid\n";
    for (const Row& row : rows) {
        out += row.name + ',' + row.side + ',' + row.space + ',' + std::to_string(row.n) + ',' + fmt17(row.r) +
               ',' + fmt17(row.value) + ',' + row.grid + '\n';
    }
    return out;
}

std::string rows_to_json(const std::vector<Row>& rows) {
    std::string out = "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const Row& row = rows[i];
        out += "  {\"name\": \"" + row.name + "\", \"side\": \"" + row.side + "\", \"space\": \"" + row.space +
               "\", \"n\": " + std::to_string(row.n) + ", \"r\": " + fmt17(row.r) +
               ", \"value\": " + fmt17(row.value) + ", \"grid\": \"" + row.grid + "\"}";
        out += (i + 1 < rows.size()) ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

// Lower rows must sit below upper rows of the same space; bounds for
// different coefficient spaces are not comparable.
void assert_sandwiched(const std::vector<Row>& rows, double slack) {
    for (const Row& lo : rows)
        for (const Row& hi : rows)
            if (lo.side == "lower" && hi.side == "upper" && lo.space == hi.space && lo.value > hi.value + slack)
                throw ordering_error("ordering violated: " + lo.name + " = " + fmt17(lo.value) + " exceeds " +
                                     hi.name + " = " + fmt17(hi.value));
}

int cli_threads() {
    if (const char* s = std::getenv("BLASCHKE_LAB_THREADS")) {
        const int v = std::atoi(s);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

template <typename F>
void cli_parallel_for(int count, F&& body) {
    const int workers = std::min(cli_threads(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int i; (i = next.fetch_add(1)) < count;) body(i);
        });
    for (auto& th : pool) th.join();
}

// ---- commands --------------------------------------------------------------

struct CommonOut {
    std::string out_path;
    std::string format = "csv";
};

int cmd_bounds(const std::string& sigma_path, const SpaceArg& space, const CommonOut& io) {
    const NodeSetPtr sigma = load_sigma(sigma_path);
    int n = 0;
    double r = 0.0;
    check(bl_nodeset_total(sigma.get(), &n), "sigma");
    check(bl_nodeset_radius(sigma.get(), &r), "sigma");

    std::vector<Row> rows;
    auto add = [&](const char* name, const char* side, const std::string& sp, double value, const char* grid) {
        rows.push_back({name, side, sp, n, r, value, grid});
    };
    double v = 0.0;
    check(bl_ub_energy(sigma.get(), &v), "ub_energy");
    add("ub_energy", "upper", "h2", v, "20x4096");
    check(bl_ub_bprime(sigma.get(), &v), "ub_bprime");
    add("ub_bprime", "upper", "h2", v, "4096");
    check(bl_ub_poisson(sigma.get(), &v), "ub_poisson");
    add("ub_poisson", "upper", "h2", v, "4096");
    check(bl_ub_simple(sigma.get(), &v), "ub_simple");
    add("ub_simple", "upper", "h2", v, "closed");
    int heuristic = 0;
    check(bl_ub_cnr(space.space, n, r, &v, &heuristic), "ub_cnr");
    add("ub_cnr", "upper", space.label, v, "closed");
    if (heuristic)
        std::cerr << "note: ub_cnr constant for " << space.label
                  << " is a log-convex interpolant, not a proved constant\n";
    int capped = 0;
    check(bl_bernstein_alpha(n, r, &v, &capped), "bernstein_alpha");
    add("bernstein_alpha", "upper", "h2", v, capped ? "cap" : "closed");
    if (bl_eval_functional_norm(space.space, r, &v) == BL_OK)
        add("eval_functional_norm", "lower", space.label, v, "closed");
    assert_sandwiched(rows, 1e-9);
    write_output(io.format == "json" ? rows_to_json(rows) : rows_to_csv(rows), io.out_path);
    return 0;
}

int cmd_sandwich(int n, double r, const SpaceArg& space, int order, int budget, std::uint64_t seed,
                 const CommonOut& io) {
    double lb = 0.0, wq = 0.0, est = 0.0, ub = 0.0;
    std::string est_route = "compression-ascent";
    std::string witness_json;  // estimate witness coordinates, when available
    std::vector<double> wit_re(static_cast<size_t>(n)), wit_im(static_cast<size_t>(n));
    size_t wit_len = 0;
    int wit_basis = -1;
    if (space.space.kind == BL_SPACE_HARDY && std::isinf(space.space.param)) {
        // contractive endpoint: the constant function realizes every link
        lb = wq = est = ub = 1.0;
        est_route = "closed";
    } else if (is_h2(space) || is_bergman(space)) {
        const int want = is_h2(space) ? 1 : 2;
        if (order != 0 && order != want)
            throw input_error("sandwich: --N must be " + std::to_string(want) + " for " + space.label);
        check(bl_lb_closed(space.space, n, r, &lb), "lb_closed");
        bl_series* psi = nullptr;
        check(bl_lower_witness(n, r, want, &psi), "lower_witness");
        const SeriesPtr guard(psi, &bl_series_free);
        const NodeSetPtr origin = repeated_node(0.0, 0.0, n);
        check(bl_quotient_norm(psi, origin.get(), 1e-10, &wq), "quotient_norm");
        const NodeSetPtr sigma = repeated_node(-r, 0.0, n);
        check(bl_c_sigma_estimate(sigma.get(), space.space, budget, seed, &est, wit_re.data(), wit_im.data(),
                                  wit_re.size(), &wit_len, &wit_basis),
              "c_sigma_estimate");
        check(bl_ub_cnr(space.space, n, r, &ub, nullptr), "ub_cnr");
    } else if (hardy_even(space)) {
        const double p = space.space.param;
        if (order != 0 && order != 1) throw input_error("sandwich: even Hardy exponents use the N = 1 witness");
        check(bl_lb_closed(space.space, n, r, &lb), "lb_closed");
        bl_series* psi = nullptr;
        check(bl_lower_witness(n, r, 1, &psi), "lower_witness");
        const SeriesPtr guard(psi, &bl_series_free);
        const NodeSetPtr origin = repeated_node(0.0, 0.0, n);
        double wq2 = 0.0;
        check(bl_quotient_norm(psi, origin.get(), 1e-10, &wq2), "quotient_norm");
        wq = std::pow(wq2, 2.0 / p);  // power transfer of the quadratic-space witness
        const NodeSetPtr sigma = repeated_node(-r, 0.0, n);
        double direct = 0.0;
        check(bl_c_sigma_estimate(sigma.get(), space.space, budget, seed, &direct, nullptr, nullptr, 0, nullptr,
                                  nullptr),
              "c_sigma_estimate");
        est = std::max(direct, wq);
        est_route = direct >= wq ? "hp-coordinate-ascent" : "witness-transfer";
        check(bl_ub_cnr(space.space, n, r, &ub, nullptr), "ub_cnr");
    } else {
        throw input_error("sandwich: supported spaces are h2, bergman, hinf and even Hardy exponents");
    }

    const double slack = 1e-6;
    std::vector<Row> rows{{"lb_closed", "lower", space.label, n, r, lb, "closed"},
                          {"witness_quotient", "lower", space.label, n, r, wq, "compression"},
                          {"c_sigma_estimate", "lower", space.label, n, r, est,
                           "budget:" + std::to_string(budget) + ";seed:" + std::to_string(seed)},
                          {"ub_cnr", "upper", space.label, n, r, ub, "closed"}};
    if (!(lb <= wq + slack && wq <= est + slack && est <= ub + slack))
        throw ordering_error("sandwich ordering violated: " + fmt17(lb) + " <= " + fmt17(wq) +
                             " <= " + fmt17(est) + " <= " + fmt17(ub) + " fails at slack 1e-6");
    if (wit_len > 0 && wit_len <= wit_re.size()) {
        const char* basis_names[] = {"malmquist", "kernel-gs", "poly"};
        witness_json = ",\n  \"witness_basis\": \"" +
                       std::string(wit_basis >= 0 && wit_basis <= 2 ? basis_names[wit_basis] : "unknown") +
                       "\",\n  \"witness_coeffs\": [";
        for (size_t i = 0; i < wit_len; ++i)
            witness_json += std::string(i ? ", " : "") + "[" + fmt17(wit_re[i]) + ", " + fmt17(wit_im[i]) + "]";
        witness_json += "]";
    }
    if (io.format == "csv") {
        write_output(rows_to_csv(rows), io.out_path);
    } else {
        std::string out = "{\n  \"space\": \"" + space.label + "\",\n  \"n\": " + std::to_string(n) +
                          ",\n  \"r\": " + fmt17(r) + ",\n  \"N\": " + std::to_string(order == 0 ? (is_bergman(space) ? 2 : 1) : order) +
                          ",\n  \"lb_closed\": " + fmt17(lb) + ",\n  \"witness_quotient\": " + fmt17(wq) +
                          ",\n  \"c_sigma_estimate\": " + fmt17(est) + ",\n  \"estimate_route\": \"" + est_route +
                          "\",\n  \"ub_cnr\": " + fmt17(ub) + ",\n  \"budget\": " + std::to_string(budget) +
                          ",\n  \"seed\": " + std::to_string(seed) + witness_json + ",\n  \"ordered\": true\n}\n";
        write_output(out, io.out_path);
    }
    return 0;
}

int cmd_np(const std::string& sigma_path, const std::string& values_path, double tol, const CommonOut& io) {
    const NodeSetPtr sigma = load_sigma(sigma_path);
    const SeriesPtr values = load_series(values_path, "values");
    const auto vals = series_values(values.get());
    std::vector<double> re(vals.size()), im(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) {
        re[i] = vals[i].first;
        im[i] = vals[i].second;
    }
    double v = 0.0;
    check(bl_np_value(sigma.get(), re.data(), im.data(), vals.size(), tol, &v), "np");
    write_output("{\"value\": " + fmt17(v) + ", \"route\": \"pick-bisection\", \"tol\": " + fmt17(tol) + "}\n",
                 io.out_path);
    return 0;
}

int cmd_cs(const std::string& coeffs_path, const CommonOut& io) {
    const SeriesPtr coeffs = load_series(coeffs_path, "coeffs");
    const auto vals = series_values(coeffs.get());
    std::vector<double> re(vals.size()), im(vals.size());
    for (size_t i = 0; i < vals.size(); ++i) {
        re[i] = vals[i].first;
        im[i] = vals[i].second;
    }
    double v = 0.0;
    check(bl_cs_value(re.data(), im.data(), vals.size(), &v), "cs");
    write_output("{\"value\": " + fmt17(v) + ", \"route\": \"toeplitz-svd\"}\n", io.out_path);
    return 0;
}

int cmd_quotient(const std::string& sigma_path, const std::string& f_path, double tol, const CommonOut& io) {
    const NodeSetPtr sigma = load_sigma(sigma_path);
    const SeriesPtr f = load_series(f_path, "f");
    double v = 0.0;
    check(bl_quotient_norm(f.get(), sigma.get(), tol, &v), "quotient");
    write_output("{\"value\": " + fmt17(v) + ", \"route\": \"compression-svd\", \"tol\": " + fmt17(tol) + "}\n",
                 io.out_path);
    return 0;
}

int cmd_bernstein(int n, double r, int trials, std::uint64_t seed, const CommonOut& io) {
    double ratio = 0.0, alpha = 0.0, cap = 0.0;
    int violations = 0;
    check(bl_bernstein_trials(n, r, trials, seed, &ratio, &alpha, &cap, &violations), "bernstein");
    std::string out = "{\"n\": " + std::to_string(n) + ", \"r\": " + fmt17(r) +
                      ", \"trials\": " + std::to_string(trials) + ", \"seed\": " + std::to_string(seed) +
                      ", \"alpha\": " + fmt17(alpha) + ", \"cap\": " + fmt17(cap) +
                      ", \"max_ratio\": " + fmt17(ratio) + ", \"violations\": " + std::to_string(violations) +
                      "}\n";
    write_output(out, io.out_path);
    return violations == 0 ? 0 : 3;
}

int cmd_carleson(const std::string& sigma_path, int budget, std::uint64_t seed, const CommonOut& io) {
    const NodeSetPtr sigma = load_sigma(sigma_path);
    double v = 0.0;
    check(bl_carleson_estimate(sigma.get(), budget, seed, &v), "carleson");
    write_output("{\"value\": " + fmt17(v) + ", \"route\": \"np-phase-ascent\", \"budget\": " +
                     std::to_string(budget) + ", \"seed\": " + std::to_string(seed) + "}\n",
                 io.out_path);
    return 0;
}

int cmd_table(int nmax, const std::string& rgrid, const SpaceArg& space, int budget, std::uint64_t seed,
              const CommonOut& io) {
    if (nmax < 1) throw input_error("table: --nmax must be >= 1");
    std::vector<int> ns;
    for (int n = 1; n <= nmax; n *= 2) ns.push_back(n);
    std::vector<double> rs;
    {
        std::stringstream ss(rgrid);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            const double r = std::atof(item.c_str());
            if (!(r >= 0.0 && r < 1.0)) throw input_error("table: r values must lie in [0,1)");
            rs.push_back(r);
        }
    }
    if (rs.empty()) throw input_error("table: --rgrid must list at least one radius");

    struct Cell {
        int n;
        double r;
    };
    std::vector<Cell> cells;
    for (int n : ns)
        for (double r : rs) cells.push_back({n, r});

    std::vector<std::vector<Row>> blocks(cells.size());
    std::vector<std::string> errors(cells.size());
    cli_parallel_for(static_cast<int>(cells.size()), [&](int idx) {
        const auto [n, r] = cells[static_cast<size_t>(idx)];
        std::vector<Row>& rows = blocks[static_cast<size_t>(idx)];
        try {
            double v = 0.0;
            check(bl_ub_cnr(space.space, n, r, &v, nullptr), "ub_cnr");
            rows.push_back({"ub_cnr", "upper", space.label, n, r, v, "closed"});
            check(bl_bernstein_alpha(n, r, &v, nullptr), "bernstein_alpha");
            rows.push_back({"bernstein_alpha", "upper", "h2", n, r, v, "closed"});
            if (bl_eval_functional_norm(space.space, r, &v) == BL_OK)
                rows.push_back({"eval_functional_norm", "lower", space.label, n, r, v, "closed"});
            if (bl_lb_closed(space.space, n, r, &v) == BL_OK)
                rows.push_back({"lb_closed", "lower", space.label, n, r, v, "closed"});
            if (is_h2(space) || is_bergman(space)) {
                bl_series* psi = nullptr;
                check(bl_lower_witness(n, r, is_h2(space) ? 1 : 2, &psi), "lower_witness");
                const SeriesPtr guard(psi, &bl_series_free);
                const NodeSetPtr origin = repeated_node(0.0, 0.0, n);
                check(bl_quotient_norm(psi, origin.get(), 1e-10, &v), "quotient_norm");
                rows.push_back({"witness_quotient", "lower", space.label, n, r, v, "compression"});
                if (budget > 0) {
                    const NodeSetPtr sigma = repeated_node(-r, 0.0, n);
                    check(bl_c_sigma_estimate(sigma.get(), space.space, budget, seed, &v, nullptr, nullptr, 0,
                                              nullptr, nullptr),
                          "c_sigma_estimate");
                    rows.push_back({"c_sigma_estimate", "lower", space.label, n, r, v,
                                    "budget:" + std::to_string(budget) + ";seed:" + std::to_string(seed)});
                }
            }
        } catch (const std::exception& e) {
            errors[static_cast<size_t>(idx)] = e.what();
        }
    });
    for (const std::string& e : errors)
        if (!e.empty()) throw input_error("table cell failed: " + e);

    std::vector<Row> rows;
    for (const auto& block : blocks) rows.insert(rows.end(), block.begin(), block.end());
    write_output(io.format == "json" ? rows_to_json(rows) : rows_to_csv(rows), io.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sided bounds and exact quotient norms for constrained interpolation on the disc"};
    app.require_subcommand(1);

    std::string sigma_path, values_path, f_path, coeffs_path, space_text = "h2", rgrid, out_path, format;
    int n = 1, order = 0, trials = 1000, budget = -1, nmax = 8;
    double r = 0.0, tol = 1e-8;
    std::uint64_t seed = 1;

    auto add_io = [&](CLI::App* sub, const char* default_format) {
        sub->add_option("--out", out_path, "output file (stdout when omitted)");
        sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->parse_complete_callback([&, default_format] {
            if (format.empty()) format = default_format;
        });
    };

    CLI::App* bounds = app.add_subcommand("bounds", "all closed-form bounds for a node set");
    bounds->add_option("--sigma", sigma_path, "node-set JSON file")->required();
    bounds->add_option("--space", space_text, "h1|h2|hinf|hp:<p>|bergman|w2:<alpha>");
    add_io(bounds, "csv");

    CLI::App* sandwich = app.add_subcommand("sandwich", "two-sided worst-case chain at (n, r)");
    sandwich->add_option("--n", n, "number of nodes (with multiplicity)")->required();
    sandwich->add_option("--r", r, "top modulus in [0,1)")->required();
    sandwich->add_option("--space", space_text, "h2|bergman|hinf|hp:<even p>");
    sandwich->add_option("--N", order, "witness profile power (1 or 2)");
    sandwich->add_option("--budget", budget, "estimator budget (default 6400)");
    sandwich->add_option("--seed", seed, "estimator seed");
    add_io(sandwich, "json");

    CLI::App* np = app.add_subcommand("np", "least interpolation bound for distinct-node data");
    np->add_option("--sigma", sigma_path, "node-set JSON file")->required();
    np->add_option("--values", values_path, "target values JSON file")->required();
    np->add_option("--tol", tol, "bisection width (default 1e-8)");
    add_io(np, "json");

    CLI::App* cs = app.add_subcommand("cs", "least sup-norm for prescribed leading coefficients");
    cs->add_option("--coeffs", coeffs_path, "coefficient JSON file")->required();
    add_io(cs, "json");

    CLI::App* quotient = app.add_subcommand("quotient", "quotient norm of a polynomial trace");
    quotient->add_option("--sigma", sigma_path, "node-set JSON file")->required();
    quotient->add_option("--f", f_path, "polynomial JSON file")->required();
    quotient->add_option("--tol", tol, "reporting tolerance");
    add_io(quotient, "json");

    CLI::App* bernstein = app.add_subcommand("bernstein", "empirical derivative bound on the model space");
    bernstein->add_option("--n", n, "number of nodes")->required();
    bernstein->add_option("--r", r, "top modulus")->required();
    bernstein->add_option("--trials", trials, "random unit elements (default 1000)");
    bernstein->add_option("--seed", seed, "trial seed");
    add_io(bernstein, "json");

    CLI::App* carleson = app.add_subcommand("carleson", "lower estimate of the Carleson constant");
    carleson->add_option("--sigma", sigma_path, "node-set JSON file (distinct nodes)")->required();
    carleson->add_option("--budget", budget, "phase-ascent budget (default 1600)");
    carleson->add_option("--seed", seed, "ascent seed");
    add_io(carleson, "json");

    CLI::App* table = app.add_subcommand("table", "bound table over (n, r) cells");
    table->add_option("--nmax", nmax, "largest n (powers of two up to this)")->required();
    table->add_option("--rgrid", rgrid, "comma-separated radii")->required();
    table->add_option("--space", space_text, "coefficient space");
    table->add_option("--budget", budget, "estimator budget per cell (default 1600, 0 disables)");
    table->add_option("--seed", seed, "estimator seed");
    table->add_option("--out", out_path, "output file")->required();
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        const CommonOut io{out_path, format.empty() ? std::string("csv") : format};
        if (bounds->parsed()) return cmd_bounds(sigma_path, parse_space(space_text), io);
        if (sandwich->parsed())
            return cmd_sandwich(n, r, parse_space(space_text), order, budget >= 1 ? budget : 6400, seed, io);
        if (np->parsed()) return cmd_np(sigma_path, values_path, tol, io);
        if (cs->parsed()) return cmd_cs(coeffs_path, io);
        if (quotient->parsed()) return cmd_quotient(sigma_path, f_path, tol, io);
        if (bernstein->parsed()) return cmd_bernstein(n, r, trials, seed, io);
        if (carleson->parsed()) return cmd_carleson(sigma_path, budget >= 1 ? budget : 1600, seed, io);
        if (table->parsed()) return cmd_table(nmax, rgrid, parse_space(space_text), budget < 0 ? 1600 : budget, seed, io);
        std::cerr << "no command given\n";
        return 2;
    } catch (const ordering_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
