#include "hypermass/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypermass/errors.hpp"

namespace hypermass {

namespace {

constexpr double kHypothesisTol = 1e-8;

void require_nonnegative_curvature(const RadialProfile& f, Kappa kappa) {
    const CurvatureMinimum low = scalar_curvature_minimum(f, kappa);
    if (low.value < -kHypothesisTol) {
        std::ostringstream os;
        os << "scalar curvature hypothesis fails: curly_R(" << low.r << ") = " << low.value;
        throw HypothesisError(os.str(), low.r, low.value);
    }
}

double regular_level_radius(const RadialProfile& f, double h, double eps_reg) {
    const double r = level_radius(f, h);
    const double fp = f.derivative(r);
    if (!(std::abs(fp) > eps_reg)) {
        std::ostringstream os;
        os << "height " << h << " is not a regular value: |f'(" << r << ")| = " << std::abs(fp);
        throw RegularityError(os.str());
    }
    return r;
}

}  // namespace

double volume_function(const RadialProfile& f, Kappa kappa, double h) {
    if (!(h < f.limit())) {
        std::ostringstream os;
        os << "height " << h << " is not below h_max = " << f.limit();
        throw DomainError(os.str());
    }
    if (h <= f.boundary_value()) {
        if (f.boundary_kind() == BoundaryKind::Entire) return 0.0;
        return sphere_area(f.domain_start(), kappa, f.dimension());
    }
    return sphere_area(level_radius(f, h), kappa, f.dimension());
}

double volume_derivative(const RadialProfile& f, Kappa kappa, double h) {
    const double r = regular_level_radius(f, h, 1e-8);
    const double area = sphere_area(r, kappa, f.dimension());
    return level_set_mean_curvature(r, kappa, f.dimension()) * area / f.derivative(r);
}

H0Result compute_h0(const RadialProfile& f, double beta, const LadderOptions& opts) {
    if (!(beta > 1.0)) throw DomainError("beta must exceed 1");
    const Dimension n = f.dimension();
    const double m = mass_boundary_limit(f, Kappa::unit(), opts);
    if (!(m > opts.tol.abs)) throw DomainError("h0 is undefined for a profile of zero mass");
    const double omega = unit_sphere_volume(n);
    H0Result out;
    out.mass = m;
    out.threshold = std::max(2.0 * beta * std::pow(m, (n - 1.0) / (n - 2.0)) * omega,
                             2.0 * beta * omega * m);
    const Kappa unit = Kappa::unit();
    const double floor_area = f.boundary_kind() == BoundaryKind::Entire
                                  ? 0.0
                                  : sphere_area(f.domain_start(), unit, n);
    if (out.threshold <= floor_area) {
        out.h0 = f.boundary_value();
        out.degenerate = true;
        return out;
    }
    // Level sets are coordinate spheres, so V_1(h) = threshold at sinh^(n-1) r = threshold / omega.
    const double r = std::asinh(std::pow(out.threshold / omega, 1.0 / (n - 1)));
    out.h0 = f.value(r);
    return out;
}

MinkowskiReport minkowski_check(const StarSurface& s, Kappa kappa, int samples, double tol) {
    const StarGeometry geometry = star_surface_geometry(s, kappa, samples);
    for (std::size_t j = 0; j < geometry.theta.size(); ++j) {
        if (geometry.mean_curvature[j] < -tol) {
            std::ostringstream os;
            os << "surface is not mean convex: H(" << geometry.theta[j]
               << ") = " << geometry.mean_curvature[j];
            throw HypothesisError(os.str(), geometry.theta[j], geometry.mean_curvature[j]);
        }
    }
    MinkowskiReport out;
    out.lhs = star_lapse_weighted_mean_curvature(s, kappa) / mass_normalization(s.n);
    out.rhs = geometry.area / (2.0 * unit_sphere_volume(s.n));
    out.margin = out.lhs - out.rhs;
    return out;
}

MinkowskiReport minkowski_sphere(double r, Kappa kappa, Dimension n) {
    const double area = sphere_area(r, kappa, n);
    MinkowskiReport out;
    out.lhs = level_set_mean_curvature(r, kappa, n) * lapse(r, kappa) * area / mass_normalization(n);
    out.rhs = area / (2.0 * unit_sphere_volume(n));
    out.margin = out.lhs - out.rhs;
    return out;
}

GrowthReport volume_growth_check(const RadialProfile& f, Kappa kappa, double h, double alpha,
                                 const LadderOptions& opts) {
    if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
    require_nonnegative_curvature(f, kappa);
    const Dimension n = f.dimension();
    const double r = regular_level_radius(f, h, opts.tol.reg);
    const double area = sphere_area(r, kappa, n);
    const double weighted = level_set_mean_curvature(r, kappa, n) * lapse(r, kappa) * area;
    const double m = mass_boundary_limit(f, kappa, opts);
    GrowthReport out;
    out.lhs = volume_derivative(f, kappa, h);
    out.rhs = (weighted - (1.0 + 1.0 / (alpha * alpha)) * mass_normalization(n) * m) / alpha;
    out.residual = out.lhs - out.rhs;
    return out;
}

GrowthReport sharpened_growth_check(const RadialProfile& f, Kappa kappa, double h,
                                    const LadderOptions& opts) {
    const Dimension n = f.dimension();
    const double m = f.is_constant() ? 0.0 : mass_boundary_limit(f, kappa, opts);
    if (!(m > opts.tol.abs)) throw HypothesisError("zero mass: the growth hypothesis fails", h, m);
    require_nonnegative_curvature(f, kappa);
    regular_level_radius(f, h, opts.tol.reg);
    const double cn = mass_normalization(n);
    const double volume = volume_function(f, kappa, h);
    if (!(volume > cn / (n - 1) * m)) {
        std::ostringstream os;
        os << "level-set area " << volume << " does not exceed c_n m / (n - 1) = " << cn / (n - 1) * m;
        throw HypothesisError(os.str(), h, volume);
    }
    const double excess = volume / (2.0 * unit_sphere_volume(n) * m) - 1.0;
    GrowthReport out;
    out.lhs = volume_derivative(f, kappa, h);
    out.rhs = cn * (2.0 * m / (3.0 * std::sqrt(3.0))) * excess * std::sqrt(excess);
    out.residual = out.lhs - out.rhs;
    return out;
}

double optimal_alpha(const RadialProfile& f, Kappa kappa, double h, const LadderOptions& opts) {
    const double m = mass_boundary_limit(f, kappa, opts);
    const double volume = volume_function(f, kappa, h);
    const double excess = volume / (2.0 * unit_sphere_volume(f.dimension()) * m) - 1.0;
    if (!(excess > 0.0)) throw HypothesisError("optimal alpha needs V > 2 omega m", h, volume);
    return std::sqrt(3.0 / excess);
}

ComparisonReport comparison_property(const RadialProfile& f, double beta, int points,
                                     double rel_tol, const LadderOptions& opts) {
    if (points < 2) throw DomainError("comparison grid needs at least two heights");
    const Dimension n = f.dimension();
    const H0Result h0 = compute_h0(f, beta, opts);
    if (h0.degenerate) {
        throw HypothesisError("h0 threshold lies below every level-set area", h0.h0, h0.threshold);
    }
    const Kappa kappa(std::pow(h0.mass, 1.0 / (n - 2)));
    const RadialProfile scaled = rescale(f, h0.h0, kappa);
    ComparisonReport out;
    out.kappa = kappa.value();
    out.h0 = h0.h0;
    out.h_end = std::min(comparison_blowup_height(n, beta), scaled.limit());
    out.heights.reserve(points);
    for (int j = 0; j < points; ++j) out.heights.push_back(out.h_end * j / points);
    out.Y = ode_values(n, beta, out.heights);
    out.V.reserve(points);
    for (std::size_t j = 0; j < out.heights.size(); ++j) {
        const double v = volume_function(scaled, kappa, out.heights[j]);
        out.V.push_back(v);
        if (out.holds && out.Y[j] > v * (1.0 + rel_tol)) {
            out.holds = false;
            out.first_violation = out.heights[j];
        }
    }
    return out;
}

HeightBoundReport height_bound_check(const RadialProfile& f, double beta,
                                     const LadderOptions& opts) {
    const Dimension n = f.dimension();
    HeightBoundReport out;
    out.n = n;
    out.beta = beta;
    const OdeSolution ode = ode_comparison(n, beta);
    out.C = ode.blowup_height;
    out.blowup_numeric = ode.blowup_height;
    out.blowup_closed = ode.closed_form_blowup;
    out.sup_f = f.limit();
    out.m = f.is_constant() ? 0.0 : mass_boundary_limit(f, Kappa::unit(), opts);
    if (!(out.m > opts.tol.abs)) {
        out.degenerate = true;
        out.h0 = out.sup_f;
        out.verdict = false;
        return out;
    }
    const H0Result h0 = compute_h0(f, beta, opts);
    if (h0.degenerate) {
        throw HypothesisError("h0 threshold lies below every level-set area", h0.h0, h0.threshold);
    }
    out.h0 = h0.h0;
    out.sup_minus_h0 = out.sup_f - out.h0;
    const double scale = std::pow(out.m, 1.0 / (n - 2));
    out.bound = out.C * scale;
    out.ratio = out.sup_minus_h0 / scale;
    out.verdict = out.sup_minus_h0 > 0.0 && out.sup_minus_h0 < out.bound;
    return out;
}

}  // namespace hypermass
