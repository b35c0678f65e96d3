#include <algorithm>
#include <cmath>
#include <functional>

#include "cli.hpp"
#include "hypermass/ads.hpp"
#include "hypermass/errors.hpp"
#include "hypermass/flat_norm.hpp"
#include "hypermass/stability.hpp"

namespace hypermass::cli {

namespace {

using CheckFn = std::function<bool(Json&)>;

struct Runner {
    const RunConfig& config;
    std::vector<CheckResult>& results;
    std::string suite;

    void run(const std::string& name, const CheckFn& fn) {
        CheckResult r{suite, name, false, Json::object()};
        try {
            r.pass = fn(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail["error"] = e.what();
        }
        results.push_back(std::move(r));
    }
};

std::vector<double> log_grid(double start, double lo, double hi, int points) {
    std::vector<double> out;
    for (int j = 0; j < points; ++j) {
        out.push_back(start + std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * j / (points - 1)));
    }
    return out;
}

CurvatureVariant variant_of(const RunConfig& c) {
    return c.inject_fault ? CurvatureVariant::FlippedLapseTerm : CurvatureVariant::Exact;
}

const std::vector<int> kDims = {3, 4, 5, 6, 7};
const std::vector<double> kAdsMasses = {0.1, 1.0, 10.0};

void oracle_suite(Runner& run) {
    const CurvatureVariant variant = variant_of(run.config);
    run.run("ads_scalar_constancy", [&](Json& d) {
        for (int n : kDims) {
            for (double m : kAdsMasses) {
                const RadialProfile f = ads_profile(Dimension(n), m);
                for (double r : log_grid(f.domain_start(), 1e-3, 20.0, 100)) {
                    const double R = scalar_curvature(f, Kappa::unit(), r, variant).curly_R;
                    if (!(std::abs(R) <= 1e-8)) {
                        d = {{"n", n}, {"m", m}, {"r", r}, {"curly_R", R}};
                        return false;
                    }
                }
            }
        }
        return true;
    });
    auto equivalence = [&](const RadialProfile& f, const std::vector<double>& grid, Json& d) {
        for (double r : grid) {
            const double R = scalar_curvature(f, Kappa::unit(), r, variant).R;
            const double oracle = warped_scalar_oracle(f, Kappa::unit(), r);
            if (!(std::abs(R - oracle) <= 1e-6)) {
                d = {{"profile", f.label()}, {"r", r}, {"R", R}, {"oracle_R", oracle}};
                return false;
            }
        }
        return true;
    };
    run.run("ads_oracle_equivalence", [&](Json& d) {
        for (int n : kDims) {
            for (double m : kAdsMasses) {
                const RadialProfile f = ads_profile(Dimension(n), m);
                if (!equivalence(f, log_grid(f.domain_start(), 1e-3, 20.0, 100), d)) return false;
            }
        }
        return true;
    });
    run.run("smooth_oracle_equivalence", [&](Json& d) {
        for (int n : kDims) {
            for (const RadialProfile& f : seeded_smooth_profiles(Dimension(n), run.config.seed, 10)) {
                if (!equivalence(f, log_grid(0.0, 0.05, 20.0, 100), d)) return false;
            }
        }
        return true;
    });
}

void mass_suite(Runner& run) {
    const LadderOptions opts = run.config.ladder();
    run.run("ads_mass", [&](Json& d) {
        for (int n : kDims) {
            for (double m : kAdsMasses) {
                const double got = mass_boundary_limit(ads_profile(Dimension(n), m), Kappa::unit(), opts);
                if (!(std::abs(got - m) <= 1e-6 * m)) {
                    d = {{"n", n}, {"m", m}, {"m_boundary", got}};
                    return false;
                }
            }
        }
        return true;
    });
    run.run("balance", [&](Json& d) {
        const Dimension n(run.config.n);
        std::vector<RadialProfile> corpus{ads_profile(n, 1.0), constant_profile(n, 0.0)};
        for (const RadialProfile& f : seeded_smooth_profiles(n, run.config.seed, 3)) corpus.push_back(f);
        for (const RadialProfile& f : corpus) {
            for (int i = 1; i <= n; ++i) {
                const double H = mass_functional_lapse(f, LapseBasis(i, n), opts);
                if (!(std::abs(H) <= 1e-10)) {
                    d = {{"profile", f.label()}, {"index", i}, {"H", H}};
                    return false;
                }
            }
        }
        return true;
    });
    run.run("rigidity", [&](Json& d) {
        for (int n : kDims) {
            const RadialProfile f = constant_profile(Dimension(n), 0.7);
            const double m = mass_boundary_limit(f, Kappa::unit(), opts);
            for (double r : {0.1, 1.0, 5.0}) {
                const double R = scalar_curvature(f, Kappa::unit(), r).R;
                if (m != 0.0 || std::abs(R + n * (n - 1.0)) > 1e-12) {
                    d = {{"n", n}, {"m", m}, {"r", r}, {"R", R}};
                    return false;
                }
            }
        }
        return true;
    });
}

bool identity_ladder(const RadialProfile& f, const std::vector<double>& radii,
                     const LadderOptions& opts, Json& d) {
    double first_total = 0.0;
    bool first = true;
    for (double r : radii) {
        // Heights near the flat end are not regular values; the identity is
        // only claimed on regular ones.
        if (!(std::abs(f.derivative(r)) > 10.0 * opts.tol.reg)) continue;
        const double h = f.value(r);
        const MassReport rep = mass_level_set(f, Kappa::unit(), h, opts);
        const double scale = std::max(1.0, std::abs(rep.m_boundary));
        if (first) first_total = rep.m_levelset_total;
        first = false;
        if (!(rep.residual_identity < 1e-6 * scale) ||
            !(std::abs(rep.m_levelset_total - first_total) < 1e-6 * scale)) {
            d = {{"profile", f.label()}, {"h", h}, {"report", to_json(rep)}};
            return false;
        }
    }
    return true;
}

void identity_suite(Runner& run) {
    const LadderOptions opts = run.config.ladder();
    run.run("levelset_identity_ads", [&](Json& d) {
        for (int n : kDims) {
            for (double m : kAdsMasses) {
                const RadialProfile f = ads_profile(Dimension(n), m);
                if (!identity_ladder(f, log_grid(f.domain_start(), 1e-2, 5.0, 10), opts, d)) return false;
            }
        }
        return true;
    });
    run.run("levelset_identity_smooth", [&](Json& d) {
        for (const RadialProfile& f :
             seeded_smooth_profiles(Dimension(run.config.n), run.config.seed, 10)) {
            if (!identity_ladder(f, log_grid(0.0, 0.2, 4.0, 10), opts, d)) return false;
        }
        return true;
    });
}

void scaling_suite(Runner& run) {
    const LadderOptions opts = run.config.ladder();
    run.run("mass_scaling", [&](Json& d) {
        for (int n : {3, 4, 5}) {
            for (double m : kAdsMasses) {
                const RadialProfile f = ads_profile(Dimension(n), m);
                for (double k : {0.5, 2.0, std::pow(m, 1.0 / (n - 2))}) {
                    const MassScaling s = mass_scaling_check(f, 0.1, Kappa(k), opts);
                    if (!(std::abs(s.m_rescaled - s.predicted) <= 1e-6 * s.predicted)) {
                        d = {{"n", n}, {"m", m}, {"kappa", k}, {"m_rescaled", s.m_rescaled},
                             {"predicted", s.predicted}};
                        return false;
                    }
                }
            }
        }
        return true;
    });
    run.run("curvature_scaling", [&](Json& d) {
        const Dimension n(run.config.n);
        for (const RadialProfile& f : seeded_smooth_profiles(n, run.config.seed, 10)) {
            for (double k : {0.5, 2.0, 3.0}) {
                const RadialProfile g = rescale(f, 0.2, Kappa(k));
                for (double r : log_grid(0.0, 0.05, 10.0, 25)) {
                    const double lhs = scalar_curvature(g, Kappa(k), r / k).curly_R;
                    const double rhs = k * k * scalar_curvature(f, Kappa::unit(), r).curly_R;
                    if (!(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)))) {
                        d = {{"profile", f.label()}, {"kappa", k}, {"r", r}, {"lhs", lhs}, {"rhs", rhs}};
                        return false;
                    }
                }
            }
        }
        return true;
    });
    run.run("volume_scaling", [&](Json& d) {
        for (double m : {0.25, 1.0}) {
            const Dimension n(run.config.n);
            const RadialProfile f = ads_profile(n, m);
            const double h0 = compute_h0(f, run.config.beta, opts).h0;
            for (double k : {0.5, 2.0, std::pow(m, 1.0 / (n - 2))}) {
                const RadialProfile g = rescale(f, h0, Kappa(k));
                for (double t : {0.1, 0.4, 0.8}) {
                    const double h = t * g.limit();
                    const double lhs = volume_function(g, Kappa(k), h);
                    const double rhs = std::pow(k, 1 - n.value()) * volume_function(f, Kappa::unit(), h0 + k * h);
                    if (!(std::abs(lhs - rhs) <= 1e-8 * rhs)) {
                        d = {{"m", m}, {"kappa", k}, {"h", h}, {"lhs", lhs}, {"rhs", rhs}};
                        return false;
                    }
                }
            }
        }
        return true;
    });
}

void inequality_suite(Runner& run) {
    const LadderOptions opts = run.config.ladder();
    const Dimension n(run.config.n);
    run.run("minkowski_spheres", [&](Json& d) {
        for (double r : {0.1, 0.5, 1.0, 2.0, 4.0}) {
            const MinkowskiReport s = minkowski_sphere(r, Kappa::unit(), n);
            if (!(s.margin >= -1e-6)) {
                d = {{"r", r}, {"margin", s.margin}};
                return false;
            }
        }
        return true;
    });
    run.run("minkowski_corpus", [&](Json& d) {
        const auto corpus = seeded_star_surfaces(n, run.config.seed, run.config.count);
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const MinkowskiReport s = minkowski_check(corpus[i], Kappa::unit());
            if (!(s.margin >= -1e-6)) {
                d = {{"index", i}, {"margin", s.margin}};
                return false;
            }
        }
        return true;
    });
    const RadialProfile ads = ads_profile(n, 1.0);
    const std::vector<double> ladder = log_grid(ads.domain_start(), 1e-2, 5.0, 10);
    run.run("volume_growth", [&](Json& d) {
        for (double r : ladder) {
            const double h = ads.value(r);
            for (double alpha : {0.5, 1.0, 2.0}) {
                const GrowthReport g = volume_growth_check(ads, Kappa::unit(), h, alpha, opts);
                if (!(g.residual >= -1e-8)) {
                    d = {{"h", h}, {"alpha", alpha}, {"residual", g.residual}};
                    return false;
                }
            }
        }
        return true;
    });
    run.run("sharpened_growth", [&](Json& d) {
        int tested = 0;
        for (double r : ladder) {
            const double h = ads.value(r);
            GrowthReport g;
            try {
                g = sharpened_growth_check(ads, Kappa::unit(), h, opts);
            } catch (const HypothesisError&) {
                continue;  // level set too small for the sharpened form
            }
            ++tested;
            if (!(g.residual >= -1e-8)) {
                d = {{"h", h}, {"residual", g.residual}};
                return false;
            }
        }
        if (tested == 0) d = {{"error", "no level set satisfied the area hypothesis"}};
        return tested > 0;
    });
    run.run("mean_curvature_comparison", [&](Json& d) {
        std::vector<RadialProfile> corpus{ads};
        for (const RadialProfile& f : seeded_smooth_profiles(n, run.config.seed, 5)) corpus.push_back(f);
        for (const RadialProfile& f : corpus) {
            for (double r : log_grid(f.domain_start(), 1e-2, 10.0, 50)) {
                if (!(std::abs(f.derivative(r)) > 10.0 * opts.tol.reg)) continue;
                const double res = mean_curvature_comparison_check(f, Kappa::unit(), r);
                if (!(res >= -1e-8)) {
                    d = {{"profile", f.label()}, {"r", r}, {"residual", res}};
                    return false;
                }
            }
        }
        return true;
    });
    run.run("penrose", [&](Json& d) {
        for (int dim : kDims) {
            for (double m : kAdsMasses) {
                const RadialProfile f = ads_profile(Dimension(dim), m);
                const PenroseReport p = penrose_bound(f, opts);
                const double rho0 = std::sinh(f.domain_start());
                const double expected = std::sqrt(1.0 + rho0 * rho0) / rho0;
                if (!(std::abs(p.ratio - expected) <= 1e-8 * expected) || !(p.ratio >= 1.0)) {
                    d = {{"n", dim}, {"m", m}, {"ratio", p.ratio}, {"expected", expected}};
                    return false;
                }
            }
        }
        return true;
    });
}

void ode_suite(Runner& run) {
    run.run("blowup_height", [&](Json& d) {
        for (int n : kDims) {
            for (double beta : {1.5, 2.0, 4.0}) {
                const OdeSolution s = ode_comparison(Dimension(n), beta);
                if (!(std::abs(s.blowup_height - s.closed_form_blowup) < 1e-4)) {
                    d = to_json(s);
                    return false;
                }
            }
        }
        return true;
    });
    run.run("comparison_property", [&](Json& d) {
        for (double m : {0.25, 0.05, 0.01}) {
            const ComparisonReport c =
                comparison_property(ads_profile(Dimension(3), m), run.config.beta, 200, 1e-6,
                                    run.config.ladder());
            if (!c.holds) {
                const auto j = static_cast<std::size_t>(
                    std::find(c.heights.begin(), c.heights.end(), *c.first_violation) -
                    c.heights.begin());
                d = {{"m", m}, {"h", *c.first_violation}, {"Y", c.Y[j]}, {"V", c.V[j]}};
                return false;
            }
        }
        return true;
    });
}

void sweep_suite(Runner& run) {
    run.run("height_bound", [&](Json& d) {
        for (int n : {3, 4}) {
            for (double m : {0.5, 0.1, 0.02, 0.004}) {
                const HeightBoundReport r =
                    height_bound_check(ads_profile(Dimension(n), m), 2.0, run.config.ladder());
                if (!r.verdict) {
                    d = to_json(r);
                    return false;
                }
            }
        }
        return true;
    });
    run.run("convergence_sweep", [&](Json& d) {
        const std::vector<double> masses{0.5, 0.1, 0.02, 0.004, 0.0008};
        const SweepTable t = convergence_sweep(masses, 5.0, Dimension(3), 2.0, run.config.threads,
                                               run.config.ladder());
        d = to_json(t);
        return t.strictly_decreasing && t.ratio_slope >= -0.1;
    });
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {"oracle", "mass",         "identity", "scaling",
                                                   "inequalities", "ode", "sweep"};
    return names;
}

std::vector<CheckResult> run_verify(const RunConfig& config) {
    std::vector<CheckResult> results;
    const std::vector<std::string>& selected = config.suites.empty() ? verify_suite_names() : config.suites;
    for (const std::string& suite : verify_suite_names()) {
        if (std::find(selected.begin(), selected.end(), suite) == selected.end()) continue;
        Runner runner{config, results, suite};
        if (suite == "oracle") oracle_suite(runner);
        else if (suite == "mass") mass_suite(runner);
        else if (suite == "identity") identity_suite(runner);
        else if (suite == "scaling") scaling_suite(runner);
        else if (suite == "inequalities") inequality_suite(runner);
        else if (suite == "ode") ode_suite(runner);
        else sweep_suite(runner);
    }
    return results;
}

}  // namespace hypermass::cli
