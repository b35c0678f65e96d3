#include "hypermass/mass.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "hypermass/errors.hpp"
#include "hypermass/graph_geometry.hpp"
#include "hypermass/quadrature.hpp"

namespace hypermass {

namespace {

constexpr double kHypothesisTol = 1e-8;
// Rungs where |f'| falls below this carry no information.
constexpr double kUnderflow = 1e-150;

double log_cosh(double x) { return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2; }

double log_warp(double r, double k) {
    const double x = k * r;
    if (x < 1.0) return std::log(std::sinh(x) / k);
    return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2 - std::log(k);
}

}  // namespace

double mass_normalization(Dimension n) { return 2.0 * (n.value() - 1) * unit_sphere_volume(n); }

double mass_density(const RadialProfile& f, Kappa kappa, double r) {
    f.require_interior(r);
    const double fp = f.derivative(r);
    if (fp == 0.0) return 0.0;
    const double k = kappa.value();
    const int n = f.dimension();
    const double log_value =
        4.0 * log_cosh(k * r) + (n - 2) * log_warp(r, k) + 2.0 * std::log(std::abs(fp));
    return 0.5 * std::exp(log_value);
}

MassLimit mass_boundary_limit_detailed(const RadialProfile& f, Kappa kappa,
                                       const LadderOptions& opts) {
    MassLimit out;
    if (f.is_constant()) return out;
    if (opts.rungs < 2 || !(opts.r_min > 0.0)) {
        throw DomainError("mass ladder needs at least two rungs and r_min > 0");
    }
    const double k = kappa.value();
    for (int j = 0; j < opts.rungs; ++j) {
        const double r = opts.r_min * std::ldexp(1.0, j) / k;
        if (r <= f.domain_start()) continue;
        const double fp = f.derivative(r);
        if (!std::isfinite(fp) || std::abs(fp) < kUnderflow) break;
        const double value = mass_density(f, kappa, r);
        if (!std::isfinite(value)) break;
        out.rungs.push_back({r, value});
    }
    if (out.rungs.empty()) {
        // f' vanished on the whole ladder.
        return out;
    }
    if (out.rungs.size() < 2) {
        throw ConvergenceError("mass ladder kept fewer than two rungs");
    }
    const double last = out.rungs.back().value;
    const double previous = out.rungs[out.rungs.size() - 2].value;
    out.value = last;
    out.error = std::abs(last - previous);
    if (!(out.error <= std::max(opts.tol.abs, opts.tol.rel * std::abs(last)))) {
        std::ostringstream os;
        os << "mass ladder did not converge: last rungs " << previous << " and " << last;
        throw ConvergenceError(os.str());
    }
    return out;
}

double mass_boundary_limit(const RadialProfile& f, Kappa kappa, const LadderOptions& opts) {
    return mass_boundary_limit_detailed(f, kappa, opts).value;
}

double sphere_coordinate_moment(int index, Dimension n) {
    const int dim = n.value();
    if (index < 0 || index > dim) throw DomainError("coordinate index must lie in [0, n]");
    QuadOptions opts;
    opts.abs_tol = 1e-13;
    opts.rel_tol = 1e-14;
    // x^i is a product of one-variable factors in hyperspherical angles
    // theta_1..theta_{n-2} in [0, pi] and phi in [0, 2 pi), so its integral is
    // a product of one-dimensional integrals.
    double product = 1.0;
    for (int j = 1; j <= dim - 2; ++j) {
        const int power = dim - 1 - j;
        std::function<double(double)> g;
        if (index == 0 || j > index) {
            g = [power](double t) { return std::pow(std::sin(t), power); };
        } else if (j < index) {
            g = [power](double t) { return std::pow(std::sin(t), power + 1); };
        } else {
            g = [power](double t) { return std::pow(std::sin(t), power) * std::cos(t); };
        }
        product *= quad(g, 0.0, std::numbers::pi, opts).value;
    }
    std::function<double(double)> angular = [](double) { return 1.0; };
    if (index == dim - 1) angular = [](double t) { return std::cos(t); };
    if (index == dim) angular = [](double t) { return std::sin(t); };
    return product * quad(angular, 0.0, 2.0 * std::numbers::pi, opts).value;
}

double mass_functional_lapse(const RadialProfile& f, LapseBasis basis, const LadderOptions& opts) {
    const Kappa unit = Kappa::unit();
    const Dimension n = f.dimension();
    if (basis.index() == 0) return mass_normalization(n) * mass_boundary_limit(f, unit, opts);
    // For the lapse x^i sinh r the surface integrand is
    // (n - 1) cosh^3 r f'^2 sinh^(n-1) r x^i = 2 (n - 1) tanh r mass_density x^i.
    const MassLimit radial = mass_boundary_limit_detailed(f, unit, opts);
    const double r = radial.rungs.empty() ? 1.0 : radial.rungs.back().r;
    const double factor = 2.0 * (n - 1) * std::tanh(r) * radial.value;
    return factor * sphere_coordinate_moment(basis.index(), n);
}

double bulk_density(const RadialProfile& f, Kappa kappa, double r) {
    const ScalarCurvature sc = scalar_curvature(f, kappa, r);
    // Below the rounding floor the curvature is indistinguishable from zero;
    // keeping the noise would let it integrate up against the growing area.
    if (!(std::abs(sc.curly_R) > sc.roundoff)) return 0.0;
    const double k = kappa.value();
    const int n = f.dimension();
    const double log_weight = k * r + std::log1p(std::exp(-2.0 * k * r)) - std::log(2.0) +
                              std::log(unit_sphere_volume(n)) +
                              (n - 1) * (k * r + std::log1p(-std::exp(-2.0 * k * r)) -
                                         std::log(2.0 * k));
    return std::copysign(std::exp(std::log(std::abs(sc.curly_R)) + log_weight), sc.curly_R);
}

double boundary_flux(const RadialProfile& f, Kappa kappa, double r) {
    f.require_interior(r);
    const double V = lapse(r, kappa);
    const double vf = V * f.derivative(r);
    const double vf2 = vf * vf;
    const double Hk = level_set_mean_curvature(r, kappa, f.dimension());
    return V * Hk * (vf2 / (1.0 + vf2)) * sphere_area(r, kappa, f.dimension());
}

double bulk_decay_hint(const RadialProfile& f, Kappa kappa) {
    const double k = kappa.value();
    const double excess = f.decay_rate() - f.dimension() * k;
    if (excess > 1e-9) return 0.5 * std::min(k, excess);
    return 0.5 * k;
}

MassReport mass_level_set(const RadialProfile& f, Kappa kappa, double h,
                          const LadderOptions& opts) {
    if (f.is_constant()) {
        throw RegularityError("a constant profile has no regular values");
    }
    const double r_h = level_radius(f, h);
    const double fp = f.derivative(r_h);
    if (!(std::abs(fp) > opts.tol.reg)) {
        std::ostringstream os;
        os << "height " << h << " is not a regular value: |f'(" << r_h << ")| = " << std::abs(fp);
        throw RegularityError(os.str());
    }
    const double cn = mass_normalization(f.dimension());
    MassReport report;
    report.kappa = kappa.value();
    report.tol = opts.tol;
    report.h_used = h;
    report.r_h = r_h;
    const MassLimit limit = mass_boundary_limit_detailed(f, kappa, opts);
    report.m_boundary = limit.value;
    report.m_boundary_error = limit.error;

    QuadOptions q;
    q.abs_tol = 1e-3 * opts.tol.abs * cn;
    q.rel_tol = 1e-10;
    const double bulk =
        quad_improper([&](double r) { return bulk_density(f, kappa, r); }, r_h,
                      bulk_decay_hint(f, kappa), q)
            .value;
    report.m_levelset_bulk = bulk / cn;
    report.m_levelset_boundary = boundary_flux(f, kappa, r_h) / cn;
    report.m_levelset_total = report.m_levelset_bulk + report.m_levelset_boundary;
    report.residual_identity = std::abs(report.m_boundary - report.m_levelset_total);
    return report;
}

CurvatureMinimum scalar_curvature_minimum(const RadialProfile& f, Kappa kappa, int points) {
    const double start = f.domain_start();
    const double k = kappa.value();
    CurvatureMinimum best{start, std::numeric_limits<double>::infinity()};
    const double lo = std::log(1e-3 / k);
    const double hi = std::log(40.0 / k);
    for (int j = 0; j < points; ++j) {
        const double r = start + std::exp(lo + (hi - lo) * j / (points - 1));
        const double R = scalar_curvature(f, kappa, r).curly_R;
        if (R < best.value) best = {r, R};
    }
    return best;
}

PmtReport pmt_check(const RadialProfile& f, Kappa kappa, double h, const LadderOptions& opts) {
    PmtReport out;
    if (f.is_constant()) {
        out.holds = true;
        return out;
    }
    const CurvatureMinimum low = scalar_curvature_minimum(f, kappa);
    if (low.value < -kHypothesisTol) {
        std::ostringstream os;
        os << "scalar curvature hypothesis fails: curly_R(" << low.r << ") = " << low.value;
        throw HypothesisError(os.str(), low.r, low.value);
    }
    const MassReport report = mass_level_set(f, kappa, h, opts);
    out.mass = report.m_boundary;
    out.boundary_term = report.m_levelset_boundary;
    out.bulk = report.m_levelset_bulk;
    const double tol = kHypothesisTol * std::max(1.0, std::abs(out.mass));
    out.holds = out.mass >= out.boundary_term - tol && out.mass >= -tol;
    return out;
}

PenroseReport penrose_bound(const RadialProfile& f, const LadderOptions& opts) {
    if (f.boundary_kind() != BoundaryKind::MinimalBoundary) {
        throw DomainError("the Penrose-type bound needs a profile with a minimal boundary");
    }
    const Kappa unit = Kappa::unit();
    const Dimension n = f.dimension();
    const double r0 = f.domain_start();
    PenroseReport out;
    out.mass = mass_boundary_limit(f, unit, opts);
    out.bound = lapse(r0, unit) * sphere_area(r0, unit, n) / (2.0 * unit_sphere_volume(n));
    out.ratio = out.mass / out.bound;
    return out;
}

MassScaling mass_scaling_check(const RadialProfile& f, double h0, Kappa kappa,
                               const LadderOptions& opts) {
    MassScaling out;
    out.m_rescaled = mass_boundary_limit(rescale(f, h0, kappa), kappa, opts);
    out.predicted = mass_boundary_limit(f, Kappa::unit(), opts) /
                    std::pow(kappa.value(), f.dimension() - 2);
    return out;
}

}  // namespace hypermass
