#pragma once

// Command-line front end. run() parses the flag grammar, evaluates the
// requested table and writes CSV or JSON. Exit codes: 0 success, 1 domain or
// usage error, 2 numerical nonconvergence; errors are reported on the error
// stream as a one-line JSON record.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbmhit/density.hpp"
#include "gbmhit/errors.hpp"
#include "gbmhit/mc.hpp"
#include "gbmhit/poisson.hpp"
#include "gbmhit/specfun.hpp"
#include "gbmhit/wlambda.hpp"

namespace gbmhit::cli {

inline constexpr const char* kToolName = "gbm-hitfun";
inline constexpr const char* kVersion = "1.0.0";

/// a:b:k[:log] evaluation grid.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int points = 0;
    bool log = false;

    std::vector<double> values() const {
        std::vector<double> v;
        v.reserve(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i) {
            const double f = static_cast<double>(i) / (points - 1);
            v.push_back(log ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                            : start + f * (stop - start));
        }
        v.front() = start;
        v.back() = stop;
        return v;
    }
};

inline GridSpec parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() < 3 || parts.size() > 4 || (parts.size() == 4 && parts[3] != "log" && parts[3] != "linear"))
        throw DomainError("grid must be a:b:k[:log], got '" + text + "'", "usage");
    GridSpec g;
    try {
        std::size_t pos = 0;
        g.start = std::stod(parts[0], &pos);
        if (pos != parts[0].size()) throw std::invalid_argument("start");
        g.stop = std::stod(parts[1], &pos);
        if (pos != parts[1].size()) throw std::invalid_argument("stop");
        g.points = std::stoi(parts[2], &pos);
        if (pos != parts[2].size()) throw std::invalid_argument("points");
    } catch (const std::logic_error&) {
        throw DomainError("grid must be a:b:k[:log], got '" + text + "'", "usage");
    }
    g.log = parts.size() == 4 && parts[3] == "log";
    if (!(g.start < g.stop)) throw DomainError("grid start must be < stop");
    if (g.points < 2) throw DomainError("grid needs at least 2 points");
    if (g.log && !(g.start > 0.0)) throw DomainError("log grid needs start > 0");
    return g;
}

enum class Output { Csv, Json };

struct RunConfig {
    std::string subcommand;
    double mu = 0.0;
    double x = 2.0;
    int n = 3;
    std::optional<double> t;
    std::optional<GridSpec> t_grid;
    std::optional<double> rho;
    std::optional<GridSpec> rho_grid;
    std::optional<double> r;
    std::optional<GridSpec> r_grid;
    std::optional<double> v;
    std::optional<GridSpec> v_grid;
    std::optional<double> tol;
    mc::MCConfig mc;
    Output output = Output::Csv;
    std::optional<std::string> out_path;
};

/// Formats with 17 significant digits, '.' decimal.
inline std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Table {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

inline std::string to_csv(const Table& t) {
    std::ostringstream os;
    os << "# " << kToolName << ' ' << kVersion << ' ' << t.command << '\n';
    for (const auto& [k, v] : t.config) os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << '\n';
    }
    return os.str();
}

inline std::string to_json(const Table& t) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["command"] = t.command;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.config) cfg[k] = v;
    j["config"] = cfg;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    return j.dump(2) + "\n";
}

namespace detail {

inline std::vector<double> points(const std::optional<double>& single, const std::optional<GridSpec>& grid,
                                  const char* name) {
    if (single) return {*single};
    if (grid) return grid->values();
    throw DomainError(std::string("--") + name + " or --" + name + "-grid is required", "usage");
}

inline quad::QuadratureSpec density_quad(const RunConfig& rc) {
    auto q = default_density_quad();
    if (rc.tol) q.abs_tol = q.rel_tol = *rc.tol;
    return q;
}

inline void add_model(Table& t, const RunConfig& rc, const quad::QuadratureSpec& q) {
    t.config.emplace_back("mu", fmt(rc.mu));
    t.config.emplace_back("x", fmt(rc.x));
    t.config.emplace_back("quad_abs_tol", fmt(q.abs_tol));
    t.config.emplace_back("quad_rel_tol", fmt(q.rel_tol));
    t.config.emplace_back("quad_max_subdivisions", std::to_string(q.max_subdivisions));
}

inline std::string regime_name(TailRegime r) { return r == TailRegime::PowerLaw ? "power_law" : "log_corrected"; }

inline Table density_table(const RunConfig& rc) {
    const auto q = density_quad(rc);
    const DensityEvaluator ev(ModelParams(rc.mu, rc.x), q);
    Table t{"density", {}, {"t", "q"}, {}};
    add_model(t, rc, q);
    for (double tv : points(rc.t, rc.t_grid, "t")) t.rows.push_back({fmt(tv), fmt(q_density(ev, tv))});
    return t;
}

inline Table wlambda_table(const RunConfig& rc) {
    const auto rep = build_w(ModelParams(rc.mu, rc.x));
    Table t{"wlambda", {}, {"v", "w1", "w2", "w"}, {}};
    t.config.emplace_back("mu", fmt(rc.mu));
    t.config.emplace_back("x", fmt(rc.x));
    t.config.emplace_back("u_nodes", std::to_string(rep.u_nodes().size()));
    for (double v : points(rc.v, rc.v_grid, "v")) {
        if (!(v >= 0.0)) throw DomainError("v must be >= 0");
        const double w1 = rep.w1(v);
        const double w2 = rep.w2(v);
        t.rows.push_back({fmt(v), fmt(w1), fmt(w2), fmt(w1 + w2)});
    }
    return t;
}

inline Table zeros_table(const RunConfig& rc) {
    const auto zs = k_zero_set(rc.mu);
    Table t{"zeros", {{"mu", fmt(rc.mu)}, {"count", std::to_string(zs.count())}}, {"index", "re", "im"}, {}};
    for (std::size_t i = 0; i < zs.zeros.size(); ++i)
        t.rows.push_back({std::to_string(i), fmt(zs.zeros[i].real()), fmt(zs.zeros[i].imag())});
    return t;
}

inline Table laplace_table(const RunConfig& rc) {
    const auto q = density_quad(rc);
    const DensityEvaluator ev(ModelParams(rc.mu, rc.x), q);
    Table t{"laplace-check", {}, {"r", "analytic", "numeric", "abs_diff"}, {}};
    add_model(t, rc, q);
    for (double r : points(rc.r, rc.r_grid, "r")) {
        const double a = laplace_ratio(rc.mu, rc.x, r);
        const double b = laplace_of_density(ev, r);
        t.rows.push_back({fmt(r), fmt(a), fmt(b), fmt(std::abs(a - b))});
    }
    return t;
}

inline Table tail_table(const RunConfig& rc) {
    const auto q = density_quad(rc);
    const DensityEvaluator ev(ModelParams(rc.mu, rc.x), q);
    const auto tc = tail_constant(ev);
    Table t{"tail", {}, {"t", "normalised_tail", "limit", "error_estimate", "regime"}, {}};
    add_model(t, rc, q);
    // analytic constants carry no table; show the convergence anyway
    auto rows = tc.table;
    if (rows.empty())
        for (int k = 0; k < 12; ++k) {
            const double tv = 1e4 * std::max(1.0, (rc.x - 1) * (rc.x - 1)) * std::pow(4.0, k);
            rows.emplace_back(tv, normalised_tail(ev, tv));
        }
    for (const auto& [tv, g] : rows)
        t.rows.push_back({fmt(tv), fmt(g), fmt(tc.value), fmt(tc.error_estimate), regime_name(tc.regime)});
    return t;
}

inline Table kernel_table(const RunConfig& rc) {
    const auto q = density_quad(rc);
    const DensityEvaluator ev(ModelParams(rc.mu, rc.x), q);
    Table t{"kernel", {}, {"rho", "P_subord", "P_closed", "rel_diff"}, {}};
    add_model(t, rc, q);
    t.config.emplace_back("n", std::to_string(rc.n));
    t.config.emplace_back("alpha", fmt(2.0 * rc.mu - rc.n + 1.0));
    auto kq = default_kernel_quad();
    if (rc.tol) kq.abs_tol = kq.rel_tol = *rc.tol;
    t.config.emplace_back("kernel_quad_rel_tol", fmt(kq.rel_tol));
    for (double rho : points(rc.rho, rc.rho_grid, "rho")) {
        const double ps = kernel_subordination(ev, rc.n, rho, kq);
        double pc = std::nan("");
        if (rc.n >= 3 || std::abs(rc.mu - 0.5) < 1e-12) pc = kernel_closed(ev, rc.n, rho);
        const double rel = std::isnan(pc) ? pc : std::abs(pc - ps) / std::abs(ps);
        t.rows.push_back({fmt(rho), fmt(ps), fmt(pc), fmt(rel)});
    }
    return t;
}

inline Table kernel_tail_table(const RunConfig& rc) {
    const auto q = density_quad(rc);
    const DensityEvaluator ev(ModelParams(rc.mu, rc.x), q);
    const auto kt = kernel_tail(ev, rc.n);
    Table t{"kernel-tail", {}, {"rho", "normalised_kernel", "limit", "error_estimate", "regime"}, {}};
    add_model(t, rc, q);
    t.config.emplace_back("n", std::to_string(rc.n));
    for (const auto& [rho, g] : kt.table)
        t.rows.push_back({fmt(rho), fmt(g), fmt(kt.value), fmt(kt.error_estimate), regime_name(kt.regime)});
    return t;
}

inline void add_mc_config(std::vector<std::pair<std::string, std::string>>& cfg, const mc::MCConfig& m) {
    // worker count is left out: the report must not depend on it
    cfg.emplace_back("seed", std::to_string(m.seed));
    cfg.emplace_back("paths", std::to_string(m.paths));
    cfg.emplace_back("dt", fmt(m.dt));
    cfg.emplace_back("bridge", m.bridge_correction ? "on" : "off");
    cfg.emplace_back("time_cap", "1e4*max(1,1/(4mu^2+1))");
}

inline std::string mc_validate(const RunConfig& rc) {
    const auto results = mc::validation_suite(rc.mc);
    std::vector<std::pair<std::string, std::string>> cfg;
    add_mc_config(cfg, rc.mc);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    if (rc.output == Output::Csv) {
        Table t{"mc-validate", cfg, {"test", "statistic", "threshold", "pass"}, {}};
        for (const auto& r : results) t.rows.push_back({r.test, fmt(r.statistic), fmt(r.threshold), r.pass ? "true" : "false"});
        return to_csv(t);
    }
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["command"] = "mc-validate";
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    c["seed"] = std::to_string(rc.mc.seed);
    c["paths"] = rc.mc.paths;
    c["dt"] = fmt(rc.mc.dt);
    c["bridge"] = rc.mc.bridge_correction;
    c["time_cap"] = "1e4*max(1,1/(4mu^2+1))";
    j["config"] = c;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json e;
        e["test"] = r.test;
        e["statistic"] = fmt(r.statistic);
        e["threshold"] = fmt(r.threshold);
        e["pass"] = r.pass;
        arr.push_back(e);
    }
    j["results"] = arr;
    j["all_pass"] = all;
    return j.dump(2) + "\n";
}

} // namespace detail

inline std::string error_record(const std::string& code, const std::string& message, int exit_code) {
    nlohmann::ordered_json j;
    j["error"] = {{"code", code}, {"message", message}, {"exit_code", exit_code}};
    return j.dump() + "\n";
}

/// Executes one command; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"Hitting-time functional of geometric Brownian motion: densities, kernels and Monte-Carlo checks",
                 kToolName};
    app.require_subcommand(1);
    std::string t_grid, rho_grid, r_grid, v_grid, bridge = "on", output = "csv", out_path;
    std::optional<double> t, rho, r, v, tol;
    app.add_option("--mu", rc.mu, "drift parameter mu >= 0");
    app.add_option("--x", rc.x, "start point x > 1");
    app.add_option("--n", rc.n, "hyperbolic dimension n >= 2");
    auto* t_opt = app.add_option("--t", t, "single time");
    auto* tg_opt = app.add_option("--t-grid", t_grid, "time grid a:b:k[:log]");
    t_opt->excludes(tg_opt);
    auto* rho_opt = app.add_option("--rho", rho, "single boundary distance");
    auto* rhog_opt = app.add_option("--rho-grid", rho_grid, "distance grid a:b:k[:log]");
    rho_opt->excludes(rhog_opt);
    auto* r_opt = app.add_option("--r", r, "single Laplace argument");
    auto* rg_opt = app.add_option("--r-grid", r_grid, "Laplace argument grid a:b:k[:log]");
    r_opt->excludes(rg_opt);
    auto* v_opt = app.add_option("--v", v, "single kernel argument");
    auto* vg_opt = app.add_option("--v-grid", v_grid, "kernel argument grid a:b:k[:log]");
    v_opt->excludes(vg_opt);
    app.add_option("--tol", tol, "quadrature tolerance (absolute and relative)");
    app.add_option("--seed", rc.mc.seed, "RNG seed");
    app.add_option("--paths", rc.mc.paths, "Monte-Carlo paths");
    app.add_option("--dt", rc.mc.dt, "time step");
    app.add_option("--workers", rc.mc.workers, "worker threads");
    app.add_option("--bridge", bridge, "Brownian-bridge hitting correction")->check(CLI::IsMember({"on", "off"}));
    app.add_option("--output", output, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_path, "output file (default stdout)");
    const std::pair<const char*, const char*> subcommands[] = {
        {"density", "hitting-time density q(t) (--mu --x, --t or --t-grid)"},
        {"wlambda", "kernel w = w1 + w2 (--mu --x, --v or --v-grid)"},
        {"zeros", "zeros of K_mu in the left half-plane (--mu)"},
        {"laplace-check", "numeric Laplace transform of q against the Bessel ratio (--mu --x, --r or --r-grid)"},
        {"tail", "density tail constant and its extrapolation (--mu --x)"},
        {"kernel", "Poisson kernel by subordination and closed form (--mu --x --n, --rho or --rho-grid)"},
        {"kernel-tail", "normalised kernel tail rho^{n+2mu-1} P (--mu --x --n)"},
        {"mc-validate", "Monte-Carlo validation suite (--seed --paths --dt --workers --bridge)"},
    };
    for (const auto& [name, desc] : subcommands) app.add_subcommand(name, desc)->fallthrough();

    auto fail = [&](const std::string& code, const std::string& msg, int exit_code) {
        err << error_record(code, msg, exit_code);
        return exit_code;
    };
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        return fail("usage", e.what(), 1);
    }

    try {
        rc.subcommand = app.get_subcommands().front()->get_name();
        rc.t = t;
        rc.rho = rho;
        rc.r = r;
        rc.v = v;
        rc.tol = tol;
        if (!t_grid.empty()) rc.t_grid = parse_grid(t_grid);
        if (!rho_grid.empty()) rc.rho_grid = parse_grid(rho_grid);
        if (!r_grid.empty()) rc.r_grid = parse_grid(r_grid);
        if (!v_grid.empty()) rc.v_grid = parse_grid(v_grid);
        rc.mc.bridge_correction = bridge == "on";
        rc.output = output == "json" ? Output::Json : Output::Csv;
        if (!out_path.empty()) rc.out_path = out_path;
        if (const char* env = std::getenv("GBM_HITFUN_THREADS"); env && *env) {
            try {
                rc.mc.workers = std::stoi(env);
            } catch (const std::logic_error&) {
                throw DomainError("GBM_HITFUN_THREADS must be an integer", "usage");
            }
        }
        if (rc.tol && !(*rc.tol > 0.0)) throw DomainError("--tol must be > 0");
        if (rc.n < 2) throw DomainError("--n must be >= 2");
        rc.mc.validate();

        std::string text;
        if (rc.subcommand == "mc-validate") {
            text = detail::mc_validate(rc);
        } else {
            Table tab;
            if (rc.subcommand == "density") tab = detail::density_table(rc);
            else if (rc.subcommand == "wlambda") tab = detail::wlambda_table(rc);
            else if (rc.subcommand == "zeros") tab = detail::zeros_table(rc);
            else if (rc.subcommand == "laplace-check") tab = detail::laplace_table(rc);
            else if (rc.subcommand == "tail") tab = detail::tail_table(rc);
            else if (rc.subcommand == "kernel") tab = detail::kernel_table(rc);
            else tab = detail::kernel_tail_table(rc);
            text = rc.output == Output::Json ? to_json(tab) : to_csv(tab);
        }
        if (rc.out_path) {
            std::ofstream f(*rc.out_path, std::ios::binary);
            if (!f) throw DomainError("cannot open output file " + *rc.out_path, "io");
            f << text;
        } else {
            out << text;
        }
        return 0;
    } catch (const NonConvergence& e) {
        return fail(e.code(), e.what(), 2);
    } catch (const Error& e) {
        return fail(e.code(), e.what(), 1);
    }
}

inline int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

} // namespace gbmhit::cli
