#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "hypermass/ads.hpp"
#include "hypermass/errors.hpp"
#include "hypermass/flat_norm.hpp"
#include "hypermass/stability.hpp"

namespace hypermass::cli {

LadderOptions RunConfig::ladder() const {
    LadderOptions opts;
    opts.r_min = r_min;
    opts.rungs = rungs;
    opts.tol = tol;
    return opts;
}

void RunConfig::validate() const {
    auto fail = [](const std::string& what) { throw ConfigError(what); };
    if (n < 3) fail("n must be >= 3");
    if (!(m > 0.0)) fail("m must be positive");
    if (!(kappa > 0.0)) fail("kappa must be positive");
    if (!(beta > 1.0)) fail("beta must exceed 1");
    if (!(rho > 0.0)) fail("rho must be positive");
    if (!(tol.abs > 0.0) || !(tol.rel > 0.0) || !(tol.reg > 0.0)) fail("tolerances must be positive");
    if (!(identity_tol > 0.0)) fail("identity tolerance must be positive");
    if (!(r_min > 0.0) || rungs < 2) fail("ladder needs r_min > 0 and at least two rungs");
    if (!format.empty() && format != "csv" && format != "json") fail("format must be csv or json");
    if (count < 1 || grid < 2) fail("count must be >= 1 and grid >= 2");
    if (radius && !(*radius > 0.0)) fail("radius must be positive");
    for (std::size_t i = 0; i < masses.size(); ++i) {
        if (!(masses[i] > 0.0)) fail("sweep masses must be positive");
        if (i > 0 && !(masses[i] < masses[i - 1])) fail("sweep masses must be strictly decreasing");
    }
}

int thread_budget() {
    const int hardware = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYPERMASS_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || cap < 1) {
            throw ConfigError("HYPERMASS_THREADS must be a positive integer");
        }
        return static_cast<int>(std::min<long>(cap, hardware));
    }
    return hardware;
}

void write_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path temp = target;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream file(temp, std::ios::binary | std::ios::trunc);
        if (!file) throw Error("cannot open " + temp.string() + " for writing");
        file << content;
        file.flush();
        if (!file) {
            file.close();
            fs::remove(temp);
            throw Error("failed writing " + temp.string());
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        fs::remove(temp);
        throw Error("cannot move output into place: " + ec.message());
    }
}

namespace {

const std::vector<double> kDefaultSweep = {0.5, 0.1, 0.02, 0.004, 0.0008};

RadialProfile make_profile(const RunConfig& c) {
    const Dimension n(c.n);
    if (c.family == "ads") return ads_profile(n, c.m);
    if (c.family == "constant") return constant_profile(n, 0.0);
    if (c.family == "sech") return seeded_smooth_profiles(n, c.seed, 1).front();
    if (c.family == "file") {
        if (c.profile_path.empty()) throw ConfigError("--family file needs --profile PATH");
        std::ifstream in(c.profile_path);
        if (!in) throw ConfigError("cannot read profile file " + c.profile_path);
        Json doc;
        try {
            doc = Json::parse(in);
        } catch (const Json::exception& e) {
            throw ConfigError(std::string("profile file is not valid JSON: ") + e.what());
        }
        return profile_from_json(doc);
    }
    throw ConfigError("unknown family \"" + c.family + "\" (ads, constant, sech, file)");
}

void flatten(const Json& doc, const std::string& prefix, std::string& out) {
    if (doc.is_object()) {
        for (const auto& item : doc.items()) {
            flatten(item.value(), prefix.empty() ? item.key() : prefix + "." + item.key(), out);
        }
        return;
    }
    out += prefix + "," + doc.dump() + "\n";
}

std::string render(const Json& doc, const std::string& format) {
    if (format == "csv") {
        std::string out = "key,value\n";
        flatten(doc, "", out);
        return out;
    }
    return doc.dump(2) + "\n";
}

struct Outcome {
    std::string text;
    int code = 0;
};

std::vector<double> profile_grid(const RadialProfile& f, double kappa, int points) {
    std::vector<double> grid;
    const double lo = std::log(1e-3 / kappa);
    const double hi = std::log(20.0 / kappa);
    for (int j = 0; j < points; ++j) {
        grid.push_back(f.domain_start() + std::exp(lo + (hi - lo) * j / (points - 1)));
    }
    return grid;
}

Outcome cmd_mass(const RunConfig& c) {
    const RadialProfile f = make_profile(c);
    const Kappa kappa(c.kappa);
    Json doc;
    doc["profile"] = f.label();
    doc["n"] = c.n;
    MassReport report;
    report.kappa = c.kappa;
    report.tol = c.tol;
    bool ok = true;
    if (f.is_constant()) {
        report.m_boundary = mass_boundary_limit(f, kappa, c.ladder());
    } else {
        const double h = c.h.value_or(f.value(f.domain_start() + 1.0 / c.kappa));
        report = mass_level_set(f, kappa, h, c.ladder());
        ok = report.residual_identity < c.identity_tol * std::max(1.0, std::abs(report.m_boundary));
    }
    doc["report"] = to_json(report);
    return {render(doc, c.format), ok ? 0 : 1};
}

Outcome cmd_scalar(const RunConfig& c) {
    const RadialProfile f = make_profile(c);
    const Kappa kappa(c.kappa);
    Json rows = Json::array();
    std::string csv = "r,R,curly_R,oracle_R,H_bar\n";
    for (double r : profile_grid(f, c.kappa, c.grid)) {
        const ScalarCurvature sc = scalar_curvature(f, kappa, r);
        const double oracle = warped_scalar_oracle(f, kappa, r);
        const double H = graph_mean_curvature(f, kappa, r);
        rows.push_back({{"r", r}, {"R", sc.R}, {"curly_R", sc.curly_R}, {"oracle_R", oracle},
                        {"H_bar", H}});
        char line[256];
        std::snprintf(line, sizeof line, "%.12g,%.12g,%.12g,%.12g,%.12g\n", r, sc.R, sc.curly_R,
                      oracle, H);
        csv += line;
    }
    if (c.format == "json") {
        Json doc{{"profile", f.label()}, {"kappa", c.kappa}, {"rows", rows}};
        return {doc.dump(2) + "\n", 0};
    }
    return {csv, 0};
}

Outcome cmd_penrose(const RunConfig& c) {
    const RadialProfile f = make_profile(c);
    const PenroseReport p = penrose_bound(f, c.ladder());
    Json doc{{"profile", f.label()}, {"mass", p.mass}, {"bound", p.bound}, {"ratio", p.ratio}};
    if (c.family == "ads") {
        const double rho0 = ads_horizon_radius(Dimension(c.n), c.m);
        doc["rho0"] = rho0;
        doc["expected_ratio"] = std::sqrt(1.0 + rho0 * rho0) / rho0;
    }
    return {render(doc, c.format), p.ratio >= 1.0 - 1e-8 ? 0 : 1};
}

Outcome cmd_minkowski(const RunConfig& c) {
    const Kappa kappa(c.kappa);
    const Dimension n(c.n);
    Json doc;
    bool ok = true;
    if (c.radius) {
        const MinkowskiReport closed = minkowski_sphere(*c.radius, kappa, n);
        const MinkowskiReport numeric = minkowski_check(coordinate_sphere(*c.radius, n), kappa);
        doc = {{"radius", *c.radius},
               {"closed_form", {{"lhs", closed.lhs}, {"rhs", closed.rhs}, {"margin", closed.margin}}},
               {"quadrature",
                {{"lhs", numeric.lhs}, {"rhs", numeric.rhs}, {"margin", numeric.margin}}}};
        ok = closed.margin >= -1e-6 && numeric.margin >= -1e-6;
    } else {
        Json rows = Json::array();
        const auto corpus = seeded_star_surfaces(n, c.seed, c.count);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const MinkowskiReport r = minkowski_check(corpus[i], kappa);
            rows.push_back({{"index", i}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"margin", r.margin}});
            ok = ok && r.margin >= -1e-6;
        }
        doc = {{"seed", c.seed}, {"surfaces", rows}};
    }
    doc["kappa"] = c.kappa;
    return {render(doc, c.format), ok ? 0 : 1};
}

Outcome cmd_height(const RunConfig& c) {
    const RadialProfile f = make_profile(c);
    const HeightBoundReport r = height_bound_check(f, c.beta, c.ladder());
    return {render(to_json(r), c.format), r.verdict ? 0 : 1};
}

Outcome cmd_ode(const RunConfig& c) {
    const OdeSolution s = ode_comparison(Dimension(c.n), c.beta);
    const bool ok = std::abs(s.blowup_height - s.closed_form_blowup) < 1e-4;
    return {render(to_json(s), c.format), ok ? 0 : 1};
}

Outcome cmd_sweep(const RunConfig& c) {
    const std::vector<double>& masses = c.masses.empty() ? kDefaultSweep : c.masses;
    const SweepTable t =
        convergence_sweep(masses, c.rho, Dimension(c.n), c.beta, c.threads, c.ladder());
    const std::string text = c.format == "json" ? to_json(t).dump(2) + "\n" : sweep_csv(t);
    return {text, t.strictly_decreasing ? 0 : 1};
}

Outcome cmd_verify(const RunConfig& c) {
    if (c.suites_given && c.suites.empty()) throw ConfigError("no verify suite selected");
    for (const std::string& s : c.suites) {
        const auto& names = verify_suite_names();
        if (std::find(names.begin(), names.end(), s) == names.end()) {
            throw ConfigError("unknown verify suite \"" + s + "\"");
        }
    }
    const std::vector<CheckResult> results = run_verify(c);
    std::string text;
    int failed = 0;
    for (const CheckResult& r : results) {
        Json line{{"suite", r.suite}, {"check", r.check}, {"pass", r.pass}, {"detail", r.detail}};
        text += line.dump() + "\n";
        failed += r.pass ? 0 : 1;
    }
    Json summary{{"summary", "verify"},
                 {"checks", results.size()},
                 {"failed", failed},
                 {"fault_injected", c.inject_fault}};
    text += summary.dump() + "\n";
    return {text, failed == 0 ? 0 : 1};
}

constexpr const char* kSweepHelp =
    "Run the AdS convergence sweep. CSV columns (fixed order): "
    "m,M_A,M_Bplus,M_Bminus,flat_upper,ratio where ratio = flat_upper / "
    "((rho + 1) m + rho^n m^(1/(n-2))).";

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Numerical checks for the positive mass theorem on asymptotically hyperbolic graphs",
                 "hypermass"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_config("--config", "", "TOML configuration file (flags take precedence)");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--n", c.n, "Dimension n of the base hyperbolic space (>= 3)");
    app.add_option("--m", c.m, "Mass of the AdS-Schwarzschild profile");
    app.add_option("--masses", c.masses, "Strictly decreasing masses for the sweep")->delimiter(',');
    app.add_option("--kappa", c.kappa, "Scale kappa of H^n_kappa");
    app.add_option("--beta", c.beta, "Threshold factor beta > 1");
    app.add_option("--rho", c.rho, "Radius of the H-ball");
    app.add_option("--h", c.h, "Level height for the mass identity");
    app.add_option("--r", c.radius, "Coordinate sphere radius for minkowski");
    app.add_option("--abs-tol", c.tol.abs, "Absolute tolerance");
    app.add_option("--rel-tol", c.tol.rel, "Relative tolerance");
    app.add_option("--reg-tol", c.tol.reg, "Regular-value threshold on |f'|");
    app.add_option("--identity-tol", c.identity_tol,
                   "Level-set identity tolerance, relative to max(1, m)");
    app.add_option("--r-min", c.r_min, "First rung of the mass ladder (kappa r units)");
    app.add_option("--rungs", c.rungs, "Number of ladder rungs");
    app.add_option("--format", c.format, "Output format: csv or json");
    app.add_option("--output", c.output, "Write output to this path (atomic)");
    app.add_option("--seed", c.seed, "Seed for randomized corpora");
    app.add_option("--family", c.family, "Profile family: ads, constant, sech, file");
    app.add_option("--profile", c.profile_path, "Profile JSON document for --family file");
    app.add_option("--count", c.count, "Size of seeded corpora");
    app.add_option("--grid", c.grid, "Number of grid radii for scalar");

    app.add_subcommand("mass", "Mass by boundary limit and by the level-set identity");
    app.add_subcommand("scalar", "Scalar curvature, oracle and graph mean curvature on a grid");
    app.add_subcommand("penrose", "Penrose-type lower bound for a minimal boundary");
    app.add_subcommand("minkowski", "Minkowski-type inequality on spheres or a seeded corpus");
    app.add_subcommand("height", "Height bound sup f - h0 < C m^(1/(n-2))");
    app.add_subcommand("ode", "Comparison ODE and its blow-up height");
    app.add_subcommand("sweep", kSweepHelp);
    CLI::App* verify = app.add_subcommand("verify", "Run invariant suites");
    verify->add_option("--suite", c.suites, "Suites to run (default: all)")
        ->delimiter(',')
        ->each([&c](const std::string&) { c.suites_given = true; });
    verify->add_flag("--inject-fault", c.inject_fault)->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (verify->count("--suite") > 0) c.suites_given = true;
    c.command = app.get_subcommands().front()->get_name();

    try {
        c.validate();
        c.threads = thread_budget();
        Outcome result;
        if (c.command == "mass") result = cmd_mass(c);
        else if (c.command == "scalar") result = cmd_scalar(c);
        else if (c.command == "penrose") result = cmd_penrose(c);
        else if (c.command == "minkowski") result = cmd_minkowski(c);
        else if (c.command == "height") result = cmd_height(c);
        else if (c.command == "ode") result = cmd_ode(c);
        else if (c.command == "sweep") result = cmd_sweep(c);
        else result = cmd_verify(c);
        if (c.output.empty()) {
            out << result.text;
        } else {
            write_atomic(c.output, result.text);
        }
        return result.code;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace hypermass::cli
