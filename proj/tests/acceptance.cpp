// Acceptance criteria. Each criterion prints one PASS/FAIL line with the
// worst observed value against its pinned tolerance. With no argument every
// criterion runs.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hypermass/ads.hpp"
#include "hypermass/errors.hpp"
#include "hypermass/flat_norm.hpp"
#include "hypermass/graph_geometry.hpp"
#include "hypermass/mass.hpp"
#include "hypermass/stability.hpp"

using namespace hypermass;

namespace {

constexpr double kMassRelTol = 1e-6;
constexpr double kCurlyRTol = 1e-8;
constexpr double kOracleTol = 1e-6;
constexpr double kIdentityTol = 1e-6;
constexpr double kScalingTol = 1e-6;
constexpr double kPenroseTol = 1e-8;
constexpr double kPenroseN3 = 1.41421;
constexpr double kBlowupTol = 1e-4;
constexpr double kBlowupN3 = 2.59808;
constexpr double kComparisonRelTol = 1e-6;
constexpr int kComparisonPoints = 200;
constexpr double kSweepDrop = 0.1;        // last flat_upper below this fraction of the first
constexpr double kRatioSlopeFloor = -0.1;  // log ratio vs log m: bounded means no real growth
constexpr double kMinkowskiTol = 1e-6;
constexpr double kResidualTol = 1e-8;
constexpr double kBalanceTol = 1e-10;
constexpr double kRigidityTol = 1e-12;
constexpr double kRegular = 1e-6;  // |f'| floor for ladder heights

const std::vector<int> kDims{3, 4, 5, 6, 7};
const std::vector<double> kAdsMasses{0.1, 1.0, 10.0};
constexpr std::uint64_t kSeed = 1;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::vector<double> log_grid(double start, double lo, double hi, int points) {
    std::vector<double> out;
    for (int j = 0; j < points; ++j) {
        out.push_back(start + std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * j / (points - 1)));
    }
    return out;
}

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

// Largest offset in (0, cap] with |f'| above the regularity floor.
double regular_reach(const RadialProfile& f, double cap) {
    double reach = 0.0;
    for (int j = 1; j <= 2000; ++j) {
        const double d = cap * j / 2000.0;
        if (std::abs(f.derivative(f.domain_start() + d)) > kRegular) reach = d;
    }
    return reach;
}

Outcome ads_mass() {
    double worst = 0.0;
    for (int n : kDims) {
        for (double m : kAdsMasses) {
            const double got = mass_boundary_limit(ads_profile(Dimension(n), m), Kappa::unit());
            worst = std::max(worst, std::abs(got - m) / m);
        }
    }
    return {worst <= kMassRelTol, fmt("worst relative error %.3g (tol %.0e)", worst, kMassRelTol)};
}

Outcome scalar_constancy() {
    double worst_R = 0.0, worst_oracle = 0.0;
    for (int n : kDims) {
        for (double m : kAdsMasses) {
            const RadialProfile f = ads_profile(Dimension(n), m);
            for (double r : log_grid(f.domain_start(), 1e-3, 20.0, 100)) {
                const ScalarCurvature s = scalar_curvature(f, Kappa::unit(), r);
                worst_R = std::max(worst_R, std::abs(s.curly_R));
                worst_oracle = std::max(worst_oracle, std::abs(warped_scalar_oracle(f, Kappa::unit(), r) - s.R));
            }
        }
    }
    return {worst_R <= kCurlyRTol && worst_oracle <= kOracleTol,
            fmt("max |curly R| %.3g (tol %.0e), max oracle gap %.3g (tol %.0e)", worst_R, kCurlyRTol,
                worst_oracle, kOracleTol)};
}

Outcome levelset_identity() {
    double worst = 0.0;
    int ladders = 0;
    auto ladder = [&](const RadialProfile& f, double lo, double hi) {
        for (double r : log_grid(f.domain_start(), lo, hi, 10)) {
            const MassReport rep = mass_level_set(f, Kappa::unit(), f.value(r));
            worst = std::max(worst, rep.residual_identity / std::max(1.0, rep.m_boundary));
        }
        ++ladders;
    };
    for (int n : kDims) {
        for (double m : kAdsMasses) {
            const RadialProfile f = ads_profile(Dimension(n), m);
            ladder(f, 1e-2, std::min(5.0, regular_reach(f, 5.0)));
        }
    }
    for (const RadialProfile& f : seeded_smooth_profiles(Dimension(3), kSeed, 10)) {
        ladder(f, 0.2, std::min(4.0, regular_reach(f, 4.0)));
    }
    return {worst < kIdentityTol,
            fmt("%d ladders x 10 heights, worst residual / max(1, m) %.3g (tol %.0e)", ladders, worst,
                kIdentityTol)};
}

Outcome mass_scaling() {
    double worst = 0.0;
    for (int n : kDims) {
        for (double m : kAdsMasses) {
            const RadialProfile f = ads_profile(Dimension(n), m);
            for (double k : {0.5, 2.0, std::pow(m, 1.0 / (n - 2))}) {
                const MassScaling s = mass_scaling_check(f, 0.0, Kappa(k));
                worst = std::max(worst, std::abs(s.m_rescaled * std::pow(k, n - 2) - m) / m);
            }
        }
    }
    return {worst <= kScalingTol, fmt("worst relative error %.3g (tol %.0e)", worst, kScalingTol)};
}

Outcome penrose() {
    double worst = 0.0, lowest = 1e300;
    for (int n : kDims) {
        for (double m : kAdsMasses) {
            const PenroseReport p = penrose_bound(ads_profile(Dimension(n), m));
            const double rho = ads_horizon_radius(Dimension(n), m);
            const double expected = std::sqrt(1.0 + rho * rho) / rho;
            worst = std::max(worst, std::abs(p.ratio - expected) / expected);
            lowest = std::min(lowest, p.ratio);
        }
    }
    const double r3 = penrose_bound(ads_profile(Dimension(3), 1.0)).ratio;
    return {worst <= kPenroseTol && lowest >= 1.0 && std::abs(r3 - kPenroseN3) < 1e-5,
            fmt("worst ratio error %.3g (tol %.0e), min ratio %.6f, n=3 m=1 ratio %.6f", worst,
                kPenroseTol, lowest, r3)};
}

Outcome ode_blowup() {
    double worst = 0.0;
    for (int n : kDims) {
        for (double beta : {1.5, 2.0, 4.0}) {
            const double exact = 3.0 * std::sqrt(3.0) / ((n - 1) * std::sqrt(beta - 1.0));
            worst = std::max(worst, std::abs(comparison_blowup_height(Dimension(n), beta) - exact));
        }
    }
    const double h3 = comparison_blowup_height(Dimension(3), 2.0);
    return {worst <= kBlowupTol && std::abs(h3 - kBlowupN3) < 1e-5,
            fmt("worst |numeric - closed form| %.3g (tol %.0e), n=3 beta=2 height %.6f", worst,
                kBlowupTol, h3)};
}

Outcome comparison() {
    Outcome out;
    std::ostringstream os;
    for (double m : {0.25, 0.05, 0.01}) {
        const ComparisonReport c =
            comparison_property(ads_profile(Dimension(3), m), 2.0, kComparisonPoints, kComparisonRelTol);
        os << "m=" << m << (c.holds ? " holds" : " fails");
        if (!c.holds) {
            const std::size_t j = static_cast<std::size_t>(
                std::find(c.heights.begin(), c.heights.end(), *c.first_violation) - c.heights.begin());
            os << " at h=" << fmt("%.4f", *c.first_violation) << " (Y=" << fmt("%.4g", c.Y[j])
               << " > V=" << fmt("%.4g", c.V[j]) << ")";
        }
        os << "; ";
        out.pass = out.pass && c.holds;
    }
    os << "rel tol " << fmt("%.0e", kComparisonRelTol);
    out.detail = os.str();
    return out;
}

Outcome height_bound() {
    Outcome out;
    std::ostringstream os;
    for (int n : {3, 4}) {
        for (double m : {0.5, 0.1, 0.02, 0.004}) {
            const HeightBoundReport r = height_bound_check(ads_profile(Dimension(n), m), 2.0);
            const bool ok = r.verdict && r.ratio < r.C;
            out.pass = out.pass && ok;
            os << fmt("n=%d m=%g ratio %.3f/C %.3f%s; ", n, m, r.ratio, r.C, ok ? "" : " FAIL");
        }
    }
    out.detail = os.str();
    out.detail.resize(out.detail.size() - 2);
    return out;
}

Outcome convergence_sweep_criterion() {
    const std::vector<double> masses{0.5, 0.1, 0.02, 0.004, 0.0008};
    const SweepTable t = convergence_sweep(masses, 5.0, Dimension(3), 2.0, 4);
    std::ostringstream os;
    os << "flat_upper";
    for (const SweepRow& r : t.rows) os << fmt(" %.4g", r.flat_upper);
    const bool falls = t.rows.back().flat_upper < kSweepDrop * t.rows.front().flat_upper;
    const bool bounded = t.ratio_slope >= kRatioSlopeFloor;
    os << fmt("; strictly decreasing %s; last/first %.3f (need < %.1f); ratio log-log slope %.3f (need >= %.1f)",
              t.strictly_decreasing ? "yes" : "no", t.rows.back().flat_upper / t.rows.front().flat_upper,
              kSweepDrop, t.ratio_slope, kRatioSlopeFloor);
    return {t.strictly_decreasing && falls && bounded, os.str()};
}

Outcome inequalities() {
    double mink = 1e300, growth = 1e300, sharp = 1e300, comp = 1e300;
    for (int n : kDims) {
        for (double r : log_grid(0.0, 1e-2, 10.0, 40)) {
            mink = std::min(mink, minkowski_sphere(r, Kappa::unit(), Dimension(n)).margin);
        }
    }
    for (const StarSurface& s : seeded_star_surfaces(Dimension(3), kSeed, 20)) {
        mink = std::min(mink, minkowski_check(s, Kappa::unit()).margin);
    }
    for (int n : kDims) {
        const double cnn = mass_normalization(Dimension(n));
        for (double m : kAdsMasses) {
            const RadialProfile f = ads_profile(Dimension(n), m);
            for (double r : log_grid(f.domain_start(), 1e-2, std::min(5.0, regular_reach(f, 5.0)), 10)) {
                const double h = f.value(r);
                for (double alpha : {0.5, 1.0, 2.0}) {
                    growth = std::min(growth, volume_growth_check(f, Kappa::unit(), h, alpha).residual);
                }
                if (volume_function(f, Kappa::unit(), h) > cnn * m / (n - 1)) {
                    sharp = std::min(sharp, sharpened_growth_check(f, Kappa::unit(), h).residual);
                }
            }
            for (double r : log_grid(f.domain_start(), 1e-3, std::min(10.0, regular_reach(f, 10.0)), 50)) {
                comp = std::min(comp, mean_curvature_comparison_check(f, Kappa::unit(), r));
            }
        }
    }
    const bool ok = mink >= -kMinkowskiTol && growth >= -kResidualTol && sharp >= -kResidualTol &&
                    comp >= -kResidualTol;
    return {ok, fmt("min Minkowski margin %.3g (tol %.0e); min growth residual %.3g, sharpened %.3g, "
                    "comparison %.3g (tol %.0e)",
                    mink, kMinkowskiTol, growth, sharp, comp, kResidualTol)};
}

Outcome balance_rigidity() {
    double worst_balance = 0.0, worst_R = 0.0, worst_m = 0.0;
    for (int n : kDims) {
        std::vector<RadialProfile> corpus{constant_profile(Dimension(n), 0.0)};
        for (double m : kAdsMasses) corpus.push_back(ads_profile(Dimension(n), m));
        for (const RadialProfile& f : seeded_smooth_profiles(Dimension(n), kSeed, 3)) corpus.push_back(f);
        for (const RadialProfile& f : corpus) {
            for (int i = 1; i <= n; ++i) {
                worst_balance = std::max(worst_balance, std::abs(mass_functional_lapse(f, LapseBasis(i, Dimension(n)))));
            }
        }
        const RadialProfile c = constant_profile(Dimension(n), 0.7);
        worst_m = std::max(worst_m, std::abs(mass_boundary_limit(c, Kappa::unit())));
        for (double r : {0.01, 1.0, 10.0}) {
            worst_R = std::max(worst_R, std::abs(scalar_curvature(c, Kappa::unit(), r).R + n * (n - 1.0)));
        }
    }
    return {worst_balance <= kBalanceTol && worst_m == 0.0 && worst_R <= kRigidityTol,
            fmt("max |H(V_i)| %.3g (tol %.0e); constant profile mass %.3g, max |R + n(n-1)| %.3g", worst_balance,
                kBalanceTol, worst_m, worst_R)};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> list{
        {"ads_mass", ads_mass},
        {"scalar_constancy", scalar_constancy},
        {"levelset_identity", levelset_identity},
        {"mass_scaling", mass_scaling},
        {"penrose", penrose},
        {"ode_blowup", ode_blowup},
        {"comparison", comparison},
        {"height_bound", height_bound},
        {"convergence_sweep", convergence_sweep_criterion},
        {"inequalities", inequalities},
        {"balance_rigidity", balance_rigidity},
    };
    return list;
}

bool run_one(std::size_t index) {
    const auto& [name, fn] = criteria()[index];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", index + 1, name.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 2) {
        std::fprintf(stderr, "usage: %s [criterion]\n", argv[0]);
        return 2;
    }
    bool all = true;
    for (std::size_t i = 0; i < criteria().size(); ++i) {
        if (argc == 2 && criteria()[i].first != argv[1]) continue;
        if (argc == 2) return run_one(i) ? 0 : 1;
        all = run_one(i) && all;
    }
    if (argc == 2) {
        std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
        return 2;
    }
    return all ? 0 : 1;
}
